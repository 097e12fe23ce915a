import pytest
from hypothesis import given, strategies as st

from majordex.oracle import brute_bounded, brute_subexcedant
from majordex.seqcore import (
    CLOSE_TRIPLES,
    IDENTICAL,
    BoundingSequence,
    DiffTuple,
    Permutation,
    SubexcedantSeq,
    are_close,
    colex_key,
    difference_and_pivot,
    is_bounded,
    is_subexcedant,
    major_index,
    max_weight,
    min_colex,
    weight,
)


@st.composite
def subexcedant(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(st.integers(0, i)) for i in range(n))


@pytest.mark.parametrize(
    "pi, expected",
    [
        ((2, 1, 4, 3, 5, 6), 4),
        ((1, 2, 3, 4, 5, 6), 0),
        ((5, 2, 1, 6, 4, 3), 12),
    ],
)
def test_major_index(pi, expected):
    assert major_index(pi) == expected
    assert Permutation(pi).maj == expected


@pytest.mark.parametrize(
    "c, expected",
    [((0, 1, 2, 1, 0, 0), 4), ((0,) * 5, 0), ((0, 1, 2, 3, 4, 3, 0, 0), 13)],
)
def test_weight(c, expected):
    assert weight(c) == expected
    assert SubexcedantSeq(c).k == expected


def test_is_bounded():
    assert is_bounded((0, 1, 2, 3, 3), 9, (0, 1, 2, 3, 3))
    assert is_bounded((0, 1, 2, 3, 3), 9, (0, 1, 2, 3, 4))
    c, b = (0, 0, 3, 0, 0), (0, 1, 2, 3, 3)
    assert c not in brute_bounded(3, 5, b)
    assert not is_bounded(c, 3, b)
    with pytest.raises(ValueError):
        is_bounded((0, 1), 1, (0, 1, 2))


def test_is_subexcedant():
    assert is_subexcedant((0, 1, 2, 1, 0, 0))
    assert not is_subexcedant((1, 0, 0))
    assert not is_subexcedant((0, 1, 3, 0))
    with pytest.raises(ValueError):
        SubexcedantSeq((0, 1, 3, 0))


def test_bounding_sequence_zero_prefix():
    BoundingSequence((0, 0, 1, 2))
    with pytest.raises(ValueError):
        BoundingSequence((0, 1, 0, 2))
    with pytest.raises(ValueError):
        BoundingSequence((0, -1))


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


@pytest.mark.parametrize(
    "k, n, expected",
    [
        (13, 8, (0, 1, 2, 3, 4, 3, 0, 0)),
        (0, 6, (0,) * 6),
        (4, 6, (0, 1, 2, 1, 0, 0)),
    ],
)
def test_min_colex(k, n, expected):
    assert min_colex(k, n) == expected


def test_min_colex_range():
    with pytest.raises(ValueError):
        min_colex(16, 6)
    with pytest.raises(ValueError):
        min_colex(-1, 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_min_colex_is_colex_minimum(n):
    for k in range(max_weight(n) + 1):
        members = brute_subexcedant(k, n)
        assert min_colex(k, n) == min(members, key=colex_key)


def test_difference_and_pivot():
    d = difference_and_pivot((0, 1, 2, 0, 1), (0, 0, 3, 0, 1))
    assert d == DiffTuple(3, (0, 1, -1))
    assert difference_and_pivot((0, 1, 2), (0, 1, 2)) is IDENTICAL
    assert difference_and_pivot((0, 0, 2, 1, 1), (0, 1, 0, 3, 0)) is None


def test_difference_guards_small_pivot():
    # non-subexcedant inputs differing only in positions 1 and 2
    assert difference_and_pivot((1, 0, 5), (0, 1, 5)) is None


def test_difference_requires_equal_weight():
    with pytest.raises(ValueError):
        difference_and_pivot((0, 1, 2), (0, 1, 1))
    with pytest.raises(ValueError):
        difference_and_pivot((0, 1), (0, 1, 0))


def test_are_close_examples():
    assert are_close((0, 1, 0, 1, 1, 1), (0, 0, 2, 0, 1, 1))
    assert difference_and_pivot((0, 1, 0, 1, 1, 1), (0, 0, 2, 0, 1, 1)).a == (1, -2, 1)
    assert are_close((0, 1, 2, 0, 1), (0, 0, 3, 0, 1))
    assert are_close((0, 1, 0, 0, 3), (0, 1, 0, 2, 1))
    assert are_close((0, 0, 2, 0, 1), (0, 1, 0, 1, 1))
    assert are_close((0, 1, 1, 3, 2), (0, 1, 2, 0, 4))
    assert not are_close((0, 0, 2, 1, 1), (0, 1, 0, 3, 0))
    assert not are_close((0, 1, 2, 0, 1), (0, 1, 0, 3, 0))
    assert are_close((0, 1, 2), (0, 1, 2))


def test_close_triples_table():
    assert len(CLOSE_TRIPLES) == 12
    assert all(sum(t) == 0 for t in CLOSE_TRIPLES)
    assert all(tuple(-x for x in t) in CLOSE_TRIPLES for t in CLOSE_TRIPLES)


@given(subexcedant())
def test_weight_bounded_by_max(c):
    assert weight(c) <= max_weight(len(c))


@given(st.data())
def test_difference_triple_sums_to_zero_and_close_is_symmetric(data):
    s = data.draw(subexcedant(min_n=3))
    n = len(s)
    k = sum(s)
    members = brute_subexcedant(k, n) if n <= 7 else [s]
    t = data.draw(st.sampled_from(members))
    d = difference_and_pivot(s, t)
    if isinstance(d, DiffTuple):
        assert sum(d.a) == 0
        assert d.p >= 3
    assert are_close(s, t) == are_close(t, s)
