"""Sequences, permutations and the statistics they carry.

All public functions take and return plain tuples of ints. Position ``i`` in
the mathematical sense (1-based) is stored at Python index ``i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

__all__ = [
    "BoundingSequence",
    "Composition",
    "SubexcedantSeq",
    "Permutation",
    "DiffTuple",
    "IDENTICAL",
    "CLOSE_TRIPLES",
    "major_index",
    "weight",
    "is_bounded",
    "is_subexcedant",
    "is_permutation",
    "colex_key",
    "max_weight",
    "min_colex",
    "difference_and_pivot",
    "are_close",
]


def _base_triples():
    return ((0, 1, -1), (0, 2, -2), (1, -2, 1), (1, -3, 2), (1, 1, -2), (1, 0, -1))


CLOSE_TRIPLES: frozenset[tuple[int, int, int]] = frozenset(
    t for a in _base_triples() for t in (a, tuple(-x for x in a))
)

# Returned by difference_and_pivot when both sequences are equal.
IDENTICAL = "identical"


@dataclass(frozen=True)
class BoundingSequence:
    b: tuple[int, ...]

    def __post_init__(self):
        b = tuple(int(x) for x in self.b)
        object.__setattr__(self, "b", b)
        seen_positive = False
        for i, x in enumerate(b, start=1):
            if x < 0:
                raise ValueError(f"bound b_{i}={x} is negative")
            if x > 0:
                seen_positive = True
            elif seen_positive:
                raise ValueError(
                    f"bound b_{i}=0 follows a positive bound; zeros must form a prefix"
                )

    @classmethod
    def subexcedant(cls, n: int) -> "BoundingSequence":
        return cls(tuple(range(n)))

    def __len__(self):
        return len(self.b)

    def __iter__(self):
        return iter(self.b)

    @property
    def total(self) -> int:
        return sum(self.b)


@dataclass(frozen=True)
class Composition:
    c: tuple[int, ...]
    k: int = field(init=False)

    def __post_init__(self):
        c = tuple(int(x) for x in self.c)
        if any(x < 0 for x in c):
            raise ValueError(f"negative entry in composition {c}")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "k", sum(c))

    def __len__(self):
        return len(self.c)

    def __iter__(self):
        return iter(self.c)

    def __getitem__(self, i):
        return self.c[i]


@dataclass(frozen=True)
class SubexcedantSeq(Composition):
    def __post_init__(self):
        super().__post_init__()
        if not is_subexcedant(self.c):
            raise ValueError(f"{self.c} is not subexcedant")


@dataclass(frozen=True)
class Permutation:
    pi: tuple[int, ...]

    def __post_init__(self):
        pi = tuple(int(x) for x in self.pi)
        if not is_permutation(pi):
            raise ValueError(f"{pi} is not a permutation of 1..{len(pi)}")
        object.__setattr__(self, "pi", pi)

    def __len__(self):
        return len(self.pi)

    def __iter__(self):
        return iter(self.pi)

    def __getitem__(self, i):
        return self.pi[i]

    @property
    def maj(self) -> int:
        return major_index(self.pi)


@dataclass(frozen=True)
class DiffTuple:
    """Difference ``s - t`` on the window ``p-2, p-1, p`` (1-based ``p``)."""

    p: int
    a: tuple[int, int, int]


def major_index(pi: Sequence[int]) -> int:
    """Sum of the (1-based) descent positions of ``pi``."""
    return sum(i for i in range(1, len(pi)) if pi[i - 1] > pi[i])


def weight(c: Sequence[int]) -> int:
    return sum(c)


def is_bounded(c: Sequence[int], k: int, b: Sequence[int]) -> bool:
    """True iff ``c`` is a ``b``-bounded composition of ``k``."""
    if len(c) != len(b):
        raise ValueError(f"length mismatch: {len(c)} != {len(b)}")
    return sum(c) == k and all(0 <= x <= y for x, y in zip(c, b))


def is_subexcedant(c: Sequence[int]) -> bool:
    return all(0 <= x <= i for i, x in enumerate(c))


def is_permutation(pi: Sequence[int]) -> bool:
    return sorted(pi) == list(range(1, len(pi) + 1))


def colex_key(c: Sequence[int]) -> tuple[int, ...]:
    """Sort key realising co-lex order (lexicographic on the reversal)."""
    return tuple(reversed(c))


def max_weight(n: int) -> int:
    return n * (n - 1) // 2


def min_colex(k: int, n: int) -> tuple[int, ...]:
    """Co-lex smallest subexcedant sequence of length ``n`` and weight ``k``.

    It has the shape ``0 1 2 ... (j-2) a_j 0 ... 0`` with ``j`` the least
    index such that ``j(j-1)/2 >= k``.
    """
    if n < 0 or not 0 <= k <= max_weight(n):
        raise ValueError(f"weight {k} out of range for length {n}")
    if k == 0:
        return (0,) * n
    j = 1
    while j * (j - 1) // 2 < k:
        j += 1
    a_j = k - (j - 1) * (j - 2) // 2
    return tuple(range(j - 1)) + (a_j,) + (0,) * (n - j)


def difference_and_pivot(s: Sequence[int], t: Sequence[int]):
    """Difference triple of two equal-weight sequences.

    Returns :data:`IDENTICAL` when ``s == t``, ``None`` when the differing
    positions do not fit in a window of three adjacent indices ending at a
    position ``p >= 3``, and a :class:`DiffTuple` otherwise.
    """
    if len(s) != len(t):
        raise ValueError(f"length mismatch: {len(s)} != {len(t)}")
    if sum(s) != sum(t):
        raise ValueError(f"weight mismatch: {sum(s)} != {sum(t)}")
    diff = [i for i in range(len(s)) if s[i] != t[i]]
    if not diff:
        return IDENTICAL
    p = diff[-1] + 1
    if p - diff[0] > 3 or p < 3:
        return None
    return DiffTuple(p, (s[p - 3] - t[p - 3], s[p - 2] - t[p - 2], s[p - 1] - t[p - 1]))


def are_close(s: Sequence[int], t: Sequence[int], triples=CLOSE_TRIPLES) -> bool:
    d = difference_and_pivot(s, t)
    if d is IDENTICAL:
        return True
    return d is not None and d.a in triples
