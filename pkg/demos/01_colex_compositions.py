"""Bounded compositions in co-lex order.

Run: python demos/01_colex_compositions.py
"""
from majordex import colexgen
from majordex.oracle import brute_bounded

# compositions of 9 into 5 parts with part i at most i-1
b = (0, 1, 2, 3, 4)
for c in colexgen.colex_list(9, 5, b):
    print(" ".join(map(str, c)))

# the same set by brute force, already sorted co-lex
assert colexgen.colex_list(9, 5, b) == brute_bounded(9, 5, b)

# other bounds work too, as long as the zeros come first
print(len(colexgen.colex_list(6, 4, (0, 3, 3, 3))), "compositions of 6 under bounds 0 3 3 3")

# the generating tree skips single-child nodes; record it to see the edges
from majordex._work import WorkCounter

ctr = WorkCounter(record_tree=True)
n_leaves = colexgen.gen_colex(4, 5, b, counter=ctr)
print(n_leaves, "leaves,", len(ctr.edges), "tree edges,", ctr.entries, "calls")
