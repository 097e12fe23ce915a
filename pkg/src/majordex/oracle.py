"""Slow, obviously-correct references used to check the generators.

Nothing here shares code with the generators: sets are built by plain
enumeration and filtering, counts by a polynomial-product recurrence.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Sequence

from .seqcore import colex_key, major_index

__all__ = [
    "brute_bounded",
    "brute_subexcedant",
    "brute_perms_by_maj",
    "perms_by_maj_table",
    "mahonian",
    "mahonian_row",
    "transposition_distance",
    "MAX_BRUTE_N",
]

MAX_BRUTE_N = 9


def brute_bounded(k: int, n: int, b: Sequence[int]) -> list[tuple[int, ...]]:
    """All ``b``-bounded ``n``-compositions of ``k``, sorted co-lex."""
    if len(b) != n:
        raise ValueError(f"bounding sequence has length {len(b)}, expected {n}")
    found = [c for c in product(*(range(x + 1) for x in b)) if sum(c) == k]
    return sorted(found, key=colex_key)


def brute_subexcedant(k: int, n: int) -> list[tuple[int, ...]]:
    return brute_bounded(k, n, tuple(range(n)))


def brute_perms_by_maj(k: int, n: int) -> set[tuple[int, ...]]:
    if n > MAX_BRUTE_N:
        raise ValueError(f"n={n} is too large for brute force (limit {MAX_BRUTE_N})")
    return {pi for pi in permutations(range(1, n + 1)) if major_index(pi) == k}


def perms_by_maj_table(n: int) -> dict[int, set[tuple[int, ...]]]:
    """All of S_n grouped by major index, in one pass."""
    if n > MAX_BRUTE_N:
        raise ValueError(f"n={n} is too large for brute force (limit {MAX_BRUTE_N})")
    table: dict[int, set[tuple[int, ...]]] = {}
    for pi in permutations(range(1, n + 1)):
        table.setdefault(major_index(pi), set()).add(pi)
    return table


@lru_cache(maxsize=None)
def mahonian_row(n: int) -> tuple[int, ...]:
    """Coefficients of (1)(1+q)(1+q+q^2)...(1+...+q^(n-1))."""
    row = [1]
    for i in range(1, n + 1):
        new = [0] * (len(row) + i - 1)
        for a, coef in enumerate(row):
            for t in range(i):
                new[a + t] += coef
        row = new
    return tuple(row)


def mahonian(n: int, k: int) -> int:
    row = mahonian_row(n)
    return row[k] if 0 <= k < len(row) else 0


def transposition_distance(sigma: Sequence[int], tau: Sequence[int]) -> int:
    """Fewest transpositions turning ``sigma`` into ``tau``: n minus the
    number of cycles of ``sigma^-1 . tau``."""
    if len(sigma) != len(tau):
        raise ValueError(f"length mismatch: {len(sigma)} != {len(tau)}")
    n = len(sigma)
    where = {x: i for i, x in enumerate(sigma)}
    rho = [where[x] for x in tau]
    seen = [False] * n
    cycles = 0
    for i in range(n):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = rho[j]
    return n - cycles
