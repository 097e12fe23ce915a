"""Co-lex order generation of bounded compositions.

The generating tree is the naive "increase one increasable position" tree
with redundant nodes removed: on the leftmost branch the leftmost increasable
position receives its minimal admissible value in a single step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from ._work import WorkCounter
from .seqcore import BoundingSequence

__all__ = [
    "PrefixSumTable",
    "as_bounds",
    "increasable_positions",
    "gen_colex",
    "colex_list",
]


@dataclass(frozen=True)
class PrefixSumTable:
    """``prefix[i]`` is ``b_1 + ... + b_i`` (``prefix[0] == 0``) and
    ``lmin[w]`` the least ``s`` with ``prefix[s] >= w``."""

    prefix: tuple[int, ...]
    lmin: tuple[int, ...]

    @classmethod
    def build(cls, b: Sequence[int]) -> "PrefixSumTable":
        prefix = [0]
        for x in b:
            prefix.append(prefix[-1] + x)
        lmin = []
        s = 0
        for w in range(prefix[-1] + 1):
            while prefix[s] < w:
                s += 1
            lmin.append(s)
        return cls(tuple(prefix), tuple(lmin))

    @property
    def total(self) -> int:
        return self.prefix[-1]


def as_bounds(b, n: int) -> tuple[int, ...]:
    if not isinstance(b, BoundingSequence):
        b = BoundingSequence(tuple(b))
    if len(b) != n:
        raise ValueError(f"bounding sequence has length {len(b)}, expected {n}")
    return b.b


def increasable_positions(c: Sequence[int], k: int, b: Sequence[int]) -> range:
    """1-based increasable positions of ``c`` with respect to ``C^b(k, n)``.

    Empty when ``c`` already has weight ``k`` or cannot be completed.
    """
    b = as_bounds(b, len(c))
    rem = k - sum(c)
    if rem <= 0:
        return range(0)
    n = len(c)
    first = next((i for i in range(n) if c[i]), n)  # 0-based leftmost nonzero
    if any(c[i] > b[i] for i in range(n)):
        return range(0)
    prefix = PrefixSumTable.build(b).prefix
    found = [i + 1 for i in range(first) if b[i] >= 1 and prefix[i + 1] >= rem]
    if first < n and c[first] < b[first] and rem <= prefix[first] + b[first] - c[first]:
        found.append(first + 1)
    if not found:
        return range(0)
    return range(found[0], found[-1] + 1)


def gen_colex(
    k: int,
    n: int,
    b,
    visit: Optional[Callable[[tuple[int, ...]], object]] = None,
    counter: Optional[WorkCounter] = None,
) -> int:
    """Visit every composition of ``C^b(k, n)`` in increasing co-lex order.

    ``visit`` receives each composition as a fresh tuple. Returns the number
    of compositions; ``k`` above the total capacity yields zero.
    """
    b = as_bounds(b, n)
    if k < 0:
        raise ValueError(f"weight {k} is negative")
    table = PrefixSumTable.build(b)
    if k > table.total:
        return 0
    prefix, lmin = table.prefix, table.lmin
    bb = (0,) + b
    c = [0] * (n + 1)
    count = 0
    ctr = counter
    edges = ctr.edges if ctr is not None else None

    def rec(k, r):
        nonlocal count
        if ctr is not None:
            ctr.entries += 1
        if k == 0:
            count += 1
            if visit is not None:
                visit(tuple(c[1:]))
            return
        if c[r] == bb[r]:
            r -= 1
        ell = lmin[k]
        for i in range(ell, r + 1):
            e = k - prefix[ell - 1] if i == ell else 1
            c[i] += e
            if ctr is not None:
                ctr.iterations += 1
                ctr.writes += 2
                if edges is not None:
                    child = tuple(c[1:])
                    parent = child[: i - 1] + (c[i] - e,) + child[i:]
                    edges.append((parent, child, i))
            rec(k - e, i)
            c[i] -= e

    rec(k, n)
    return count


def colex_list(k: int, n: int, b) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    gen_colex(k, n, b, out.append)
    return out
