"""Counting work per generated object.

Run: python demos/05_work_per_object.py
"""
from majordex.bench import measure, sweep, to_json
from majordex.seqcore import max_weight

for s in sweep("gray2", range(6, 11), "n-1"):
    print(f"n={s.n:2d} k={s.k:2d} objects={s.objects:7d} ratio={s.ratio:.2f} qchain={s.max_qchain}")

# near the maximal weight, most nodes have a single child; pruning matters there
for n in (7, 8, 9):
    k = max_weight(n) - 1
    g1, g2 = measure("gray1", k, n), measure("gray2", k, n)
    print(f"n={n} k={k}: gray1 {g1.ratio:.2f} (chain {g1.max_qchain})  gray2 {g2.ratio:.2f} (chain {g2.max_qchain})")

print(to_json(measure("perm", 4, 6)))
