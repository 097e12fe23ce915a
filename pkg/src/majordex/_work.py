from __future__ import annotations


class WorkCounter:
    """Mutable tally filled in by generators when instrumentation is on.

    ``entries`` counts procedure entries, ``iterations`` loop iterations and
    ``writes`` single-cell buffer writes. ``max_qchain`` is the longest run of
    nested q-terminal entries seen (Gray generators only). When ``record_tree``
    is set, every recursive call appends ``(parent, child, position)`` to
    ``edges``, with nodes given as snapshots of the working buffer.
    """

    __slots__ = ("entries", "iterations", "writes", "transpositions", "max_qchain", "edges")

    def __init__(self, record_tree: bool = False):
        self.entries = 0
        self.iterations = 0
        self.writes = 0
        self.transpositions = 0
        self.max_qchain = 0
        self.edges = [] if record_tree else None

    @property
    def work(self) -> int:
        return self.entries + self.iterations + self.writes
