"""Gray code for subexcedant sequences of fixed weight, plus the compact delta stream.

Run: python demos/02_gray_code_and_deltas.py
"""
from majordex.graygen import gen2_gray, gray_list, reconstruct
from majordex.seqcore import difference_and_pivot

k, n = 4, 6
seqs = gray_list(k, n)
print(len(seqs), "sequences of weight", k, "and length", n)

# consecutive sequences differ in at most three adjacent positions
for s, t in zip(seqs[:8], seqs[1:9]):
    d = difference_and_pivot(s, t)
    print("".join(map(str, s)), "->", "".join(map(str, t)), " diff", d.a, "at", d.p)

# reverse direction gives the list backwards
assert gray_list(k, n, direction=1) == seqs[::-1]

# the pruned generator emits only (p, u, window); enough to rebuild everything
deltas = []
gen2_gray(k, n, deltas.append)
for d in deltas[:6]:
    print(d)

rebuilt = []
reconstruct(k, n, rebuilt.append)
assert rebuilt == seqs
print("delta stream rebuilds the full list:", rebuilt == seqs)
