import pytest

from golden import GRAY_4_5, S46_P, S46_SEQUENCES
from majordex._work import WorkCounter
from majordex.graygen import (
    DeltaEmission,
    gen1_gray,
    gen1_gray_bounded,
    gen1_gray_directed,
    gen2_gray,
    gray_list,
    reconstruct,
)
from majordex.oracle import brute_bounded, brute_subexcedant, mahonian
from majordex.seqcore import are_close, colex_key, max_weight, min_colex
from majordex.verify import is_suffix_partitioned

SIZES = range(1, 9)


def all_k(n):
    return range(max_weight(n) + 1)


def rebuilt(k, n):
    out = []
    reconstruct(k, n, out.append)
    return out


def test_weight4_length6_prefix():
    assert gray_list(4, 6)[:3] == [(0, 1, 2, 1, 0, 0), (0, 1, 0, 3, 0, 0), (0, 0, 1, 3, 0, 0)]


def test_weight4_length5_order():
    assert gray_list(4, 5) == GRAY_4_5


def test_trivial_weight():
    assert gray_list(0, 5) == [(0,) * 5]
    assert gray_list(3, 3) == [(0, 1, 2)]


def test_count_s46():
    assert gen1_gray(4, 6) == 49 == len(brute_subexcedant(4, 6))


def test_out_of_range():
    with pytest.raises(ValueError):
        gen1_gray(7, 4)
    with pytest.raises(ValueError):
        gen2_gray(-1, 4)
    with pytest.raises(ValueError):
        gen1_gray(1, 3, direction=2)


def test_first_is_min_colex():
    for n in SIZES:
        for k in all_k(n):
            first = []
            gen1_gray(k, n, lambda c: first.append(c) if not first else None)
            assert first[0] == min_colex(k, n)


@pytest.mark.parametrize("n", SIZES)
def test_gray_list_properties(n):
    for k in all_k(n):
        seqs = gray_list(k, n)
        assert sorted(seqs, key=colex_key) == brute_subexcedant(k, n)
        assert len(seqs) == mahonian(n, k)
        assert all(are_close(s, t) for s, t in zip(seqs, seqs[1:])), (k, n)
        assert is_suffix_partitioned(seqs)


@pytest.mark.parametrize("n", SIZES)
def test_rightmost_window_prefix_is_minimal(n):
    for k in all_k(n):
        seqs = gray_list(k, n)
        for s, t in zip(seqs, seqs[1:]):
            p = max(i for i in range(n) if s[i] != t[i]) + 1
            for x in (s, t):
                head = x[: p - 2]
                assert head == min_colex(sum(head), p - 2)


def test_suffix_partition_detector():
    assert is_suffix_partitioned([(0, 1, 0), (0, 0, 1)])
    assert not is_suffix_partitioned([(0, 0, 1), (0, 1, 0), (0, 0, 1)])


@pytest.mark.parametrize("n", range(1, 8))
def test_direction_one_reverses(n):
    for k in all_k(n):
        assert gray_list(k, n, direction=1) == gray_list(k, n)[::-1]


def test_directed_entry_point():
    got = []
    gen1_gray_directed(4, 5, 1, (0,) * 5, got.append)
    assert got == GRAY_4_5[::-1]
    got = []
    gen1_gray_directed(0, 4, 0, (0, 0, 0, 3), got.append)
    assert got == [(0, 0, 0, 3)]
    # subtree below 00020 in S(4,5), entered with direction 1
    got = []
    gen1_gray_directed(2, 4, 1, (0, 0, 0, 2, 0), got.append)
    assert got == GRAY_4_5[1:5]
    with pytest.raises(ValueError):
        gen1_gray_directed(7, 4, 0, (0, 0, 0, 2, 0), got.append)


def test_gen2_weight4_length6_positions():
    em = []
    assert gen2_gray(4, 6, em.append) == 49
    assert [e.p for e in em] == S46_P
    assert em[0] == DeltaEmission(0, 0, ())


def test_gen2_trivial():
    em = []
    gen2_gray(0, 6, em.append)
    assert em == [DeltaEmission(0, 0, ())]


def test_reconstruct_weight4_length6():
    assert rebuilt(4, 6) == S46_SEQUENCES
    assert rebuilt(4, 5) == gray_list(4, 5)
    assert rebuilt(0, 4) == [(0,) * 4]


@pytest.mark.parametrize("n", SIZES)
def test_delta_stream_fidelity(n):
    for k in all_k(n):
        seqs = gray_list(k, n)
        assert rebuilt(k, n) == seqs
        em = []
        gen2_gray(k, n, em.append)
        assert len(em) == len(seqs)
        for prev, cur, e in zip(seqs, seqs[1:], em[1:]):
            p = max(i for i in range(n) if prev[i] != cur[i]) + 1
            assert e.p == p >= 3
            assert e.u == sum(cur[:p]) <= k
            assert e.window == cur[p - 3 : p]


def test_q_terminal_chain_cut():
    full, cut = WorkCounter(), WorkCounter()
    gen1_gray(11, 7, counter=full)
    gen2_gray(11, 7, counter=cut)
    assert full.max_qchain >= 4
    assert cut.max_qchain <= 3


@pytest.mark.parametrize("n", range(2, 10))
def test_gen2_q_chain_bound_all_weights(n):
    for k in all_k(n):
        ctr = WorkCounter()
        gen2_gray(k, n, counter=ctr)
        assert ctr.max_qchain <= 3, (k, n)


def test_counters_do_not_change_output():
    plain, counted = [], []
    gen2_gray(9, 7, plain.append)
    gen2_gray(9, 7, counted.append, counter=WorkCounter())
    assert plain == counted


def test_bounded_gray_experimental_covers_set():
    for b in [(0, 1, 2, 3, 4), (2, 2, 2, 2), (0, 0, 3, 1, 2)]:
        n = len(b)
        for k in range(sum(b) + 1):
            got = []
            gen1_gray_bounded(k, n, b, got.append)
            assert sorted(got, key=colex_key) == brute_bounded(k, n, b)
    got = []
    gen1_gray_bounded(4, 5, (0, 1, 2, 3, 4), got.append)
    assert got == GRAY_4_5
