import json

import pytest

from majordex.bench import GENERATORS, K_POLICIES, measure, sweep, to_json
from majordex.oracle import mahonian
from majordex.seqcore import max_weight

FIELDS = {"generator", "n", "k", "objects", "entries", "iterations", "writes", "ratio", "elapsed_ns"}


def test_measure_weight4_length6():
    s = measure("gray2", 4, 6)
    assert s.objects == 49
    assert s.ratio == (s.entries + s.iterations + s.writes) / 49


def test_measure_single_object():
    assert measure("gray2", 0, 6).objects == 1


@pytest.mark.parametrize("generator", GENERATORS)
@pytest.mark.parametrize("n", range(1, 9))
def test_objects_equal_oracle(generator, n):
    for k in (0, n - 1, max_weight(n) // 2, max_weight(n)):
        assert measure(generator, k, n).objects == mahonian(n, k)


def test_unknown_generator():
    with pytest.raises(ValueError):
        measure("heap", 2, 4)
    with pytest.raises(ValueError):
        sweep("gray2", range(4, 5), "heaviest")


def test_sweep_shapes():
    assert sweep("gray2", range(0)) == []
    stats = sweep("gray2", range(6, 10), "mid")
    assert [s.n for s in stats] == [6, 7, 8, 9]
    assert [s.k for s in stats] == [K_POLICIES["mid"](n) for n in range(6, 10)]
    objects = [s.objects for s in stats]
    assert objects == sorted(objects)


def test_json_schema():
    record = json.loads(to_json(measure("perm", 3, 5)))
    assert set(record) == FIELDS
    arr = json.loads(to_json(sweep("colex", range(3, 5))))
    assert isinstance(arr, list) and all(set(r) == FIELDS for r in arr)


@pytest.mark.parametrize("n", range(5, 10))
def test_pruning_helps_near_full_weight(n):
    # close to the maximal weight most nodes are q-terminal
    for k in (max_weight(n) - 1, max_weight(n) - 2, (n - 1) * (n - 2) // 2):
        g1, g2 = measure("gray1", k, n), measure("gray2", k, n)
        assert g2.ratio <= g1.ratio
        assert g2.max_qchain <= 3


def test_gray1_chains_grow_without_pruning():
    assert measure("gray1", 20, 7).max_qchain > 3


@pytest.mark.parametrize("policy", sorted(K_POLICIES))
def test_gray2_qchain_bounded(policy):
    for n in range(2, 11):
        k = K_POLICIES[policy](n)
        if k <= max_weight(n) and mahonian(n, k) < 300_000:
            assert measure("gray2", k, n).max_qchain <= 3


def test_ratio_flat_along_n_minus_one():
    ratios = [measure("gray2", n - 1, n).ratio for n in range(8, 13)]
    assert max(ratios) <= 10
    assert max(ratios) / min(ratios) < 1.25


def test_perm_transpositions_bounded():
    s = measure("perm", 7, 7)
    assert s.transpositions <= 3 * s.objects
