"""Gray code for the permutations of ``1..n`` with a given major index.

The delta stream of :func:`majordex.graygen.gen2_gray` drives a
:class:`~majordex.mcmahon.McMahonState`; each step turns the previous McMahon
code into the next one with at most three single-unit moves, and each move is
a single transposition of the permutation.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Optional, Sequence

from ._work import WorkCounter
from .graygen import _check, _gen2
from .mcmahon import McMahonState, psi
from .seqcore import is_subexcedant, min_colex

__all__ = ["PermEmission", "update_perm", "gen_perm_major", "perm_list"]


class PermEmission(NamedTuple):
    sigma: tuple[int, ...]
    step_transpositions: int


def update_perm(state: McMahonState, window: Sequence[int], p: int, u: int) -> int:
    """Bring ``state`` to the next code of the Gray list.

    ``window`` holds the new values at positions ``p-2, p-1, p`` and ``u`` is
    the new prefix sum through ``p``. Returns the number of transpositions
    applied (1 to 3).
    """
    s = state.s
    c2, c1, c0 = window
    x = u - c0 - c1
    if p - 2 >= 1 and s[p - 2] == c2:
        f = p - 1
        a = (s[p - 1] - c1, s[p] - c0, 0)
    else:
        f = p - 2
        x -= c2
        a = (s[p - 2] - c2, s[p - 1] - c1, s[p] - c0)
    v = 1 if a[0] > 0 else -1
    t = (v * a[0], v * a[1], v * a[2])
    transp = state.transp
    if t == (1, -1, 0):
        transp(v, f, x)
        return 1
    if t == (2, -2, 0):
        transp(v, f, x)
        transp(v, f, x)
        return 2
    if t == (1, -2, 1):
        transp(v, f, x)
        transp(-v, f + 1, x + s[f])
        return 2
    if t == (1, -3, 2):
        transp(v, f, x)
        transp(-v, f + 1, x + s[f])
        transp(-v, f + 1, x + s[f])
        return 3
    if t == (1, 1, -2):
        transp(v, f + 1, x + s[f])
        transp(v, f, x)
        transp(v, f + 1, x + s[f])
        return 3
    if a == (1, 0, -1):
        transp(1, f, x)
        transp(1, f + 1, x + s[f])
        return 2
    if a == (-1, 0, 1):
        transp(-1, f + 1, x + s[f])
        transp(-1, f, x)
        return 2
    raise RuntimeError(
        f"difference {a} at position {f} is not a Gray step; "
        f"code {state.code}, window {tuple(window)} at p={p}"
    )


def gen_perm_major(
    k: int,
    n: int,
    visit: Optional[Callable[[PermEmission], object]] = None,
    counter: Optional[WorkCounter] = None,
    check: bool = False,
) -> int:
    """Visit every permutation of ``1..n`` with major index ``k`` in Gray order.

    Consecutive permutations differ by at most three transpositions. With
    ``check`` set, every step asserts that the permutation still equals the
    image of the tracked McMahon code.
    """
    _check(k, n)
    state = McMahonState(min_colex(k, n), check=check)
    sigma = state.sigma
    count = 0

    def on_emit(p, u, c):
        nonlocal count
        count += 1
        steps = 0
        if p:
            steps = update_perm(state, (c[p - 2], c[p - 1], c[p]), p, u)
            if counter is not None:
                counter.entries += 1 + steps
        if check:
            # a single move may pass through a code outside the subexcedant
            # range (the (1, 0, -1) case does); only whole steps are checked
            if not is_subexcedant(state.code):
                raise AssertionError(f"step left the code non-subexcedant: {state.code}")
            if state.perm != psi(state.code):
                raise AssertionError(f"sigma {state.perm} != psi({state.code})")
        if visit is not None:
            visit(PermEmission(tuple(sigma[1:]), steps))

    _gen2(k, n, on_emit, counter)
    if counter is not None:
        counter.transpositions += state.transpositions
    return count


def perm_list(k: int, n: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    gen_perm_major(k, n, lambda e: out.append(e.sigma))
    return out
