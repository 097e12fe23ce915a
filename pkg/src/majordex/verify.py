"""Exhaustive property checks over small sizes, used by ``majordex verify``."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations

from .colexgen import colex_list
from .graygen import gen2_gray, gray_list, reconstruct
from .mcmahon import alpha, psi, psi_inv
from .oracle import brute_bounded, brute_perms_by_maj, brute_subexcedant, mahonian, transposition_distance
from .permgen import perm_list
from .seqcore import CLOSE_TRIPLES, are_close, colex_key, major_index, max_weight, min_colex

__all__ = ["SUITES", "is_suffix_partitioned", "check", "run", "workers_from_env"]

SUITES = ("seq", "colex", "gray", "mcmahon", "perm")


def is_suffix_partitioned(seqs) -> bool:
    """True iff, for every suffix length, equal suffixes form one block."""
    if not seqs:
        return True
    n = len(seqs[0])
    for length in range(1, n + 1):
        closed = set()
        prev = None
        for s in seqs:
            suf = s[n - length :]
            if suf != prev:
                if suf in closed:
                    return False
                if prev is not None:
                    closed.add(prev)
                prev = suf
    return True


def _seq(n, triples):
    for k in range(max_weight(n) + 1):
        m = min_colex(k, n)
        if m != brute_subexcedant(k, n)[0]:
            yield f"n={n} k={k}: min_colex {m} is not the co-lex minimum"


def _colex(n, triples):
    families = [tuple(range(n))] + [(c,) * n for c in (1, 2, 3)]
    for b in families:
        for k in range(sum(b) + 1):
            if colex_list(k, n, b) != brute_bounded(k, n, b):
                yield f"n={n} k={k} b={b}: co-lex output differs from enumeration"


def _gray(n, triples):
    for k in range(max_weight(n) + 1):
        seqs = gray_list(k, n)
        if sorted(seqs, key=colex_key) != brute_subexcedant(k, n):
            yield f"n={n} k={k}: Gray list is not S(k,n)"
        if len(seqs) != mahonian(n, k):
            yield f"n={n} k={k}: Gray list has {len(seqs)} elements, expected {mahonian(n, k)}"
        for s, t in zip(seqs, seqs[1:]):
            if not are_close(s, t, triples):
                yield f"n={n} k={k}: consecutive {s} -> {t} not close"
                break
        if not is_suffix_partitioned(seqs):
            yield f"n={n} k={k}: Gray list is not suffix partitioned"
        if gray_list(k, n, direction=1) != seqs[::-1]:
            yield f"n={n} k={k}: direction 1 is not the reversed list"
        rebuilt = []
        reconstruct(k, n, rebuilt.append)
        if rebuilt != seqs:
            yield f"n={n} k={k}: delta stream does not rebuild the Gray list"
        deltas = []
        gen2_gray(k, n, deltas.append)
        for prev, cur, d in zip(seqs, seqs[1:], deltas[1:]):
            p = max(i for i in range(n) if prev[i] != cur[i]) + 1
            if d.p != p or d.u != sum(cur[:p]):
                yield f"n={n} k={k}: emission {d} wrong for {prev} -> {cur}"
                break


def _mcmahon(n, triples):
    count = 0
    for pi in permutations(range(1, n + 1)):
        t = psi_inv(pi)
        count += 1
        if psi(t) != pi or sum(t) != major_index(pi):
            yield f"n={n}: McMahon round trip or statistic fails at {pi}"
            break
    for k in range(1, max_weight(n) + 1):
        a = alpha(n, k)
        if a != psi(min_colex(k, n)):
            yield f"n={n} k={k}: closed form alpha differs from psi(min_colex)"
        if tuple(a[x - 1] for x in a) != tuple(range(1, n + 1)):
            yield f"n={n} k={k}: alpha is not an involution"


def _perm(n, triples):
    for k in range(max_weight(n) + 1):
        perms = perm_list(k, n)
        if len(set(perms)) != len(perms) or set(perms) != brute_perms_by_maj(k, n):
            yield f"n={n} k={k}: permutation list is not the maj-{k} class"
        if perms != [psi(s) for s in gray_list(k, n)]:
            yield f"n={n} k={k}: permutation list is not psi of the Gray list"
        for a, b in zip(perms, perms[1:]):
            if transposition_distance(a, b) > 3:
                yield f"n={n} k={k}: {a} -> {b} needs more than 3 transpositions"
                break


_CHECKS = {"seq": _seq, "colex": _colex, "gray": _gray, "mcmahon": _mcmahon, "perm": _perm}


def check(suite: str, n: int, triples=CLOSE_TRIPLES) -> list[str]:
    return [f"[{suite}] {msg}" for msg in _CHECKS[suite](n, triples)]


def _check_task(args):
    return check(*args)


def workers_from_env() -> int:
    try:
        return max(1, int(os.environ.get("MAJORDEX_WORKERS", "1")))
    except ValueError:
        return 1


def run(n_max: int, suite: str = "all", triples=CLOSE_TRIPLES, workers: int = 1) -> list[str]:
    """Run one suite (or ``"all"``) for ``n = 1..n_max``; returns failure messages."""
    suites = SUITES if suite == "all" else (suite,)
    for s in suites:
        if s not in _CHECKS:
            raise ValueError(f"unknown suite {s!r}; choose from {SUITES + ('all',)}")
    tasks = [(s, n, triples) for s in suites for n in range(1, n_max + 1)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_task, tasks))
    else:
        results = [_check_task(t) for t in tasks]
    return [msg for r in results for msg in r]
