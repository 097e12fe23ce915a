"""Gray code for fixed-weight subexcedant sequences.

``gen1_gray`` walks the full generating tree and hands out whole sequences.
``gen2_gray`` is the constant amortized time variant: it cuts chains of
q-terminal calls and only reports, for each new sequence, the rightmost
changed position ``p``, the prefix sum ``u`` up to ``p`` and the three values
at positions ``p-2, p-1, p``. ``reconstruct`` rebuilds the full list from
that stream.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Optional, Sequence

from ._work import WorkCounter
from .colexgen import PrefixSumTable, as_bounds
from .seqcore import is_subexcedant, max_weight, min_colex

__all__ = [
    "DeltaEmission",
    "gen1_gray",
    "gen1_gray_directed",
    "gray_list",
    "gen2_gray",
    "reconstruct",
    "gen1_gray_bounded",
]


class DeltaEmission(NamedTuple):
    p: int
    u: int
    window: tuple[int, ...]


def _check(k: int, n: int) -> None:
    if n < 0:
        raise ValueError(f"length {n} is negative")
    if not 0 <= k <= max_weight(n):
        raise ValueError(f"weight {k} out of range 0..{max_weight(n)} for length {n}")


def _ell_table(kmax: int) -> list[int]:
    # ell[w] = min{s : s(s-1)/2 >= w}
    table = []
    s = 0
    for w in range(kmax + 1):
        while s * (s - 1) // 2 < w:
            s += 1
        table.append(s)
    return table


def _gen1(k, r, direction, c, emit, ctr):
    ell = _ell_table(k)

    def rec(k, r, d, qrun):
        if ctr is not None:
            ctr.entries += 1
            if k == 0 or k == r * (r - 1) // 2 - c[r]:
                qrun += 1
                if qrun > ctr.max_qchain:
                    ctr.max_qchain = qrun
            else:
                qrun = 0
        if k == 0:
            emit(c)
            return
        if c[r] == r - 1:
            r -= 1
        l = ell[k]
        e = k - (l - 1) * (l - 2) // 2
        if d == 0:
            c[l] += e
            rec(k - e, l, 0, qrun)
            c[l] -= e
            d = (r - l) & 1
            for i in range(l + 1, r + 1):
                c[i] += 1
                rec(k - 1, i, d, qrun)
                d ^= 1
                c[i] -= 1
            if ctr is not None:
                ctr.iterations += r - l
                ctr.writes += 2 * (r - l + 1)
        else:
            d = 0
            for i in range(r, l, -1):
                c[i] += 1
                rec(k - 1, i, d, qrun)
                d ^= 1
                c[i] -= 1
            c[l] += e
            rec(k - e, l, 1, qrun)
            c[l] -= e
            if ctr is not None:
                ctr.iterations += r - l
                ctr.writes += 2 * (r - l + 1)

    rec(k, r, direction, 0)


def gen1_gray(
    k: int,
    n: int,
    visit: Optional[Callable[[tuple[int, ...]], object]] = None,
    direction: int = 0,
    counter: Optional[WorkCounter] = None,
) -> int:
    """Visit ``S(k, n)`` in Gray code order; returns the number of sequences.

    With ``direction=1`` the list comes out reversed.
    """
    _check(k, n)
    if direction not in (0, 1):
        raise ValueError(f"direction must be 0 or 1, got {direction}")
    c = [0] * (n + 1)
    count = 0

    def emit(buf):
        nonlocal count
        count += 1
        if visit is not None:
            visit(tuple(buf[1:]))

    _gen1(k, n, direction, c, emit, counter)
    return count


def gen1_gray_directed(
    k: int,
    r: int,
    direction: int,
    c: Sequence[int],
    visit: Callable[[tuple[int, ...]], object],
    counter: Optional[WorkCounter] = None,
) -> None:
    """Run the Gray recursion from an intermediate state.

    ``c`` is a subexcedant sequence whose positions below ``r`` are zero and
    ``k`` the weight still to be placed in positions ``1..r``.
    """
    n = len(c)
    if not is_subexcedant(c):
        raise ValueError(f"{tuple(c)} is not subexcedant")
    if not 1 <= r <= n or any(c[: r - 1]):
        raise ValueError(f"positions below r={r} must be zero in {tuple(c)}")
    if k < 0 or k > r * (r - 1) // 2 - c[r - 1]:
        raise ValueError(f"weight {k} cannot be placed in positions 1..{r}")
    buf = [0, *c]
    _gen1(k, r, direction, buf, lambda b: visit(tuple(b[1:])), counter)


def gray_list(k: int, n: int, direction: int = 0) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    gen1_gray(k, n, out.append, direction)
    return out


def _gen2(k, n, emit, ctr):
    """Core of the delta-stream generator.

    ``emit(p, u, c)`` receives the 1-based working buffer; only positions
    ``>= p - 2`` hold final values at that moment.
    """
    ell = _ell_table(k)
    c = [0] * (n + 1)

    def rec(k, r, d, p, u, qrun):
        cr = c[r]
        if ctr is not None:
            ctr.entries += 1
            if k == 0 or k == r * (r - 1) // 2 - cr:
                qrun += 1
                if qrun > ctr.max_qchain:
                    ctr.max_qchain = qrun
            else:
                qrun = 0
        if k == 0:
            emit(p, u, c)
            return
        # highest position the remaining weight may still touch
        m = r - 1 if cr == r - 1 else r
        if k == r * (r - 1) // 2 - cr and (p == 0 or p - m >= 3):
            # single completion (all of 1..m at maximum) lies left of the window
            emit(p, u, c)
            return
        r = m
        l = ell[k]
        e = k - (l - 1) * (l - 2) // 2
        if d == 0:
            c[l] += e
            rec(k - e, l, 0, p, u, qrun)
            c[l] -= e
            d = (r - l) & 1
            for i in range(l + 1, r + 1):
                c[i] += 1
                rec(k - 1, i, d, i, k - 1 + c[i], qrun)
                d ^= 1
                c[i] -= 1
        else:
            d = 0
            q, v = p, u
            for i in range(r, l, -1):
                if i != r:
                    q, v = i + 1, c[i + 1] + k
                c[i] += 1
                rec(k - 1, i, d, q, v, qrun)
                d ^= 1
                c[i] -= 1
            if l != r:
                q, v = l + 1, c[l + 1] + k
            c[l] += e
            rec(k - e, l, 1, q, v, qrun)
            c[l] -= e
        if ctr is not None:
            ctr.iterations += r - l
            ctr.writes += 2 * (r - l + 1)

    rec(k, n, 0, 0, 0, 0)


def gen2_gray(
    k: int,
    n: int,
    emit: Optional[Callable[[DeltaEmission], object]] = None,
    counter: Optional[WorkCounter] = None,
) -> int:
    """Delta stream of the Gray code ``S(k, n)``; returns the emission count.

    The first emission has ``p == 0`` and an empty window: its sequence is
    ``min_colex(k, n)``. Every later emission carries
    ``(c[p-2], c[p-1], c[p])`` of the new sequence.
    """
    _check(k, n)
    count = 0

    def on_emit(p, u, c):
        nonlocal count
        count += 1
        if emit is not None:
            emit(DeltaEmission(p, u, (c[p - 2], c[p - 1], c[p]) if p else ()))

    _gen2(k, n, on_emit, counter)
    return count


def reconstruct(
    k: int,
    n: int,
    visit: Optional[Callable[[tuple[int, ...]], object]] = None,
) -> int:
    """Rebuild full sequences from the delta stream of :func:`gen2_gray`."""
    _check(k, n)
    d = [0, *min_colex(k, n)]
    count = 0

    def on_emit(p, u, c):
        nonlocal count
        count += 1
        if p:
            d[p - 2] = c[p - 2]
            d[p - 1] = c[p - 1]
            d[p] = c[p]
        if visit is not None:
            visit(tuple(d[1:]))

    _gen2(k, n, on_emit, None)
    return count


def gen1_gray_bounded(
    k: int,
    n: int,
    b,
    visit: Optional[Callable[[tuple[int, ...]], object]] = None,
) -> int:
    """Experimental: Gray-style ordering of ``C^b(k, n)`` for arbitrary bounds.

    No closeness guarantee is made for consecutive compositions.
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

    def rec(k, r, d):
        nonlocal count
        if k == 0:
            count += 1
            if visit is not None:
                visit(tuple(c[1:]))
            return
        if c[r] == bb[r]:
            r -= 1
        l = lmin[k]
        e = k - prefix[l - 1]
        if d == 0:
            c[l] += e
            rec(k - e, l, 0)
            c[l] -= e
            d = (r - l) & 1
            for i in range(l + 1, r + 1):
                c[i] += 1
                rec(k - 1, i, d)
                d ^= 1
                c[i] -= 1
        else:
            d = 0
            for i in range(r, l, -1):
                c[i] += 1
                rec(k - 1, i, d)
                d ^= 1
                c[i] -= 1
            c[l] += e
            rec(k - e, l, 1)
            c[l] -= e

    rec(k, n, 0)
    return count
