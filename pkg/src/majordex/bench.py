"""Deterministic work counting for the generators.

Work units are procedure entries, loop iterations and writes to the working
composition buffer. For the permutation driver every ``update_perm`` call and
every ``transp`` call counts as one more procedure entry. Wall-clock time is
recorded but never used for decisions.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from ._work import WorkCounter
from .colexgen import gen_colex
from .graygen import gen1_gray, gen2_gray
from .permgen import gen_perm_major
from .seqcore import max_weight

__all__ = [
    "GENERATORS",
    "K_POLICIES",
    "WorkStats",
    "measure",
    "sweep",
    "to_json",
]

GENERATORS = ("colex", "gray1", "gray2", "perm")


def _mid(n: int) -> int:
    return round(max_weight(n) / 2)


K_POLICIES: dict[str, Callable[[int], int]] = {
    "mid": _mid,
    "n-1": lambda n: max(n - 1, 0),
    "near-max": lambda n: max(max_weight(n) - 2, 0),
}


@dataclass
class WorkStats:
    generator: str
    n: int
    k: int
    objects: int
    entries: int
    iterations: int
    writes: int
    ratio: float
    elapsed_ns: int
    max_qchain: int = field(default=0, compare=False)
    transpositions: int = field(default=0, compare=False)

    def as_record(self) -> dict:
        rec = asdict(self)
        del rec["max_qchain"], rec["transpositions"]
        return rec


def _run(generator: str, k: int, n: int, counter: WorkCounter, visit=None) -> int:
    if generator == "colex":
        return gen_colex(k, n, tuple(range(n)), visit, counter=counter)
    if generator == "gray1":
        return gen1_gray(k, n, visit, counter=counter)
    if generator == "gray2":
        return gen2_gray(k, n, visit, counter=counter)
    if generator == "perm":
        return gen_perm_major(k, n, visit, counter=counter)
    raise ValueError(f"unknown generator {generator!r}; choose from {GENERATORS}")


def measure(generator: str, k: int, n: int, visit=None) -> WorkStats:
    """Run one generator with counters on.

    ``colex`` runs over the subexcedant bounds ``0 1 ... n-1``. ``visit`` is
    forwarded to the generator; it may raise to abandon a run.
    """
    counter = WorkCounter()
    start = time.perf_counter_ns()
    objects = _run(generator, k, n, counter, visit)
    elapsed = time.perf_counter_ns() - start
    work = counter.work
    return WorkStats(
        generator=generator,
        n=n,
        k=k,
        objects=objects,
        entries=counter.entries,
        iterations=counter.iterations,
        writes=counter.writes,
        ratio=work / objects if objects else float("inf"),
        elapsed_ns=elapsed,
        max_qchain=counter.max_qchain,
        transpositions=counter.transpositions,
    )


def sweep(generator: str, n_range: Iterable[int], k_policy: str = "mid") -> list[WorkStats]:
    try:
        pick = K_POLICIES[k_policy]
    except KeyError:
        raise ValueError(f"unknown k policy {k_policy!r}; choose from {sorted(K_POLICIES)}") from None
    return [measure(generator, pick(n), n) for n in n_range]


def to_json(stats) -> str:
    if isinstance(stats, WorkStats):
        return json.dumps(stats.as_record())
    return json.dumps([s.as_record() for s in stats])
