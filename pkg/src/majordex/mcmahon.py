"""McMahon code bijection between subexcedant sequences and permutations.

Permutations act on indices: ``(sigma . tau)_i = sigma[tau_i]``. The rotation
``[[u, k]]`` is the identity with its length-``u`` prefix shifted right
circularly ``k`` times, and the McMahon code ``t`` of ``pi`` is the unique
subexcedant sequence with ``pi = [[n, t_n]] . [[n-1, t_{n-1}]] ... [[1, t_1]]``.
Under this map the weight of ``t`` equals the major index of ``pi``.
"""

from __future__ import annotations

from typing import Sequence

from .seqcore import is_permutation, is_subexcedant, max_weight, min_colex

__all__ = [
    "rotation",
    "compose",
    "inverse",
    "transposition",
    "psi",
    "psi_inv",
    "alpha",
    "phi",
    "code_level",
    "McMahonState",
]


def rotation(n: int, u: int, k: int) -> tuple[int, ...]:
    """``[[u, k]]`` in one-line notation, as a permutation of ``1..n``."""
    if not 0 <= k < u <= n:
        raise ValueError(f"rotation needs 0 <= k < u <= n, got n={n}, u={u}, k={k}")
    head = [u - k + i for i in range(1, k + 1)]
    mid = [i - k for i in range(k + 1, u + 1)]
    return tuple(head + mid + list(range(u + 1, n + 1)))


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    if len(sigma) != len(tau):
        raise ValueError(f"length mismatch: {len(sigma)} != {len(tau)}")
    return tuple(sigma[t - 1] for t in tau)


def inverse(pi: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(pi)
    for i, x in enumerate(pi, start=1):
        out[x - 1] = i
    return tuple(out)


def transposition(n: int, u: int, v: int) -> tuple[int, ...]:
    pi = list(range(1, n + 1))
    pi[u - 1], pi[v - 1] = pi[v - 1], pi[u - 1]
    return tuple(pi)


def psi(t: Sequence[int]) -> tuple[int, ...]:
    """Permutation whose McMahon code is ``t``."""
    if not is_subexcedant(t):
        raise ValueError(f"{tuple(t)} is not subexcedant")
    n = len(t)
    pi = list(range(1, n + 1))
    # right-multiplying by [[i, t_i]] rotates the first i entries right t_i times
    for i in range(n, 0, -1):
        k = t[i - 1]
        if k:
            pi[:i] = pi[i - k : i] + pi[: i - k]
    return tuple(pi)


def psi_inv(pi: Sequence[int]) -> tuple[int, ...]:
    """McMahon code of ``pi``, peeled from position ``n`` down to 1."""
    if not is_permutation(pi):
        raise ValueError(f"{tuple(pi)} is not a permutation")
    rest = list(pi)
    t = [0] * len(rest)
    for i in range(len(rest), 0, -1):
        k = i - rest[i - 1]
        t[i - 1] = k
        if k:
            # left-multiply by [[i, k]]^-1, which relabels values
            rest = [y - (i - k) if y > i - k else y + k for y in rest]
        rest.pop()  # now equal to i
    return tuple(t)


def alpha(n: int, k: int) -> tuple[int, ...]:
    """Closed form of ``psi(min_colex(k, n))``; an involution."""
    if not 0 < k <= max_weight(n):
        raise ValueError(f"weight {k} out of range 1..{max_weight(n)} for length {n}")
    a = min_colex(k, n)
    j = max(i for i in range(1, n + 1) if a[i - 1])
    return tuple(phi(j, a[j - 1], i) for i in range(1, n + 1))


def phi(j: int, sj: int, i: int) -> int:
    """Image of ``i`` under the involution attached to a minimal code ending at ``j``."""
    if i > j:
        return i
    if i <= j - (sj + 1):
        return j - sj - i
    return 2 * j - sj - i


def code_level(x: int) -> int:
    """Least ``j >= 0`` with ``j(j-1)/2 >= x``."""
    j = 0
    while j * (j - 1) // 2 < x:
        j += 1
    return j


class McMahonState:
    """A code ``s`` and the permutation ``sigma = psi(s)`` kept in step.

    Both are stored 1-based (index 0 unused) and mutated in place.
    """

    __slots__ = ("s", "sigma", "transpositions", "check")

    def __init__(self, s: Sequence[int], check: bool = False):
        self.s = [0, *s]
        self.sigma = [0, *psi(s)]
        self.transpositions = 0
        self.check = check

    @property
    def code(self) -> tuple[int, ...]:
        return tuple(self.s[1:])

    @property
    def perm(self) -> tuple[int, ...]:
        return tuple(self.sigma[1:])

    def transp(self, v: int, f: int, x: int) -> None:
        """Move one unit between ``s_f`` and ``s_{f+1}`` and swap two entries of sigma.

        ``v == 1`` moves a unit from ``f`` to ``f+1``, ``v == -1`` the other way.
        Requires ``s_1..s_{f-1}`` to be the co-lex smallest code of weight ``x``.
        """
        s = self.s
        if self.check:
            if v not in (1, -1):
                raise ValueError(f"v must be +1 or -1, got {v}")
            if tuple(s[1:f]) != min_colex(x, f - 1):
                raise AssertionError(f"prefix {tuple(s[1:f])} is not minimal of weight {x}")
        j = code_level(x)
        if self.check and j == 1:
            raise AssertionError("level j=1 is unreachable")
        sj = s[j]
        a = f + 1
        b = s[f] if v == 1 else s[f] + 1
        if a <= j:
            a = j - sj - a if a <= j - sj - 1 else 2 * j - sj - a
        if b <= j:
            b = j - sj - b if b <= j - sj - 1 else 2 * j - sj - b
        sigma = self.sigma
        sigma[a], sigma[b] = sigma[b], sigma[a]
        s[f] -= v
        s[f + 1] += v
        self.transpositions += 1
