"""Permutations with a given major index, each one transpositions away from the last.

Run: python demos/04_permutations_by_major_index.py
"""
from majordex.oracle import mahonian, transposition_distance
from majordex.permgen import gen_perm_major

k, n = 4, 6
rows = []
gen_perm_major(k, n, rows.append)
print(len(rows), "permutations; expected", mahonian(n, k))

prev = None
for e in rows[:10]:
    dist = "" if prev is None else f"  ({transposition_distance(prev, e.sigma)} transposition(s))"
    print(" ".join(map(str, e.sigma)) + dist)
    prev = e.sigma

worst = max(e.step_transpositions for e in rows)
print("largest step:", worst, "transpositions")

# check mode recomputes the permutation from the code after every step; slow but reassuring
count = gen_perm_major(9, 7, check=True)
print("n=7 k=9:", count, "permutations, shadow state consistent")
