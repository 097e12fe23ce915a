"""The McMahon code: subexcedant sequences <-> permutations, weight <-> major index.

Run: python demos/03_mcmahon_code.py
"""
from itertools import permutations

from majordex.mcmahon import alpha, compose, psi, psi_inv, rotation
from majordex.seqcore import major_index, min_colex

# rotations of a prefix of the identity
print(rotation(5, 5, 3), rotation(5, 3, 1))

t = (0, 1, 2, 2, 4, 3)
pi = psi(t)
print(t, "->", pi, " weight", sum(t), " maj", major_index(pi))
assert psi_inv(pi) == t

# every permutation of 1..5 has a code with weight equal to its major index
for p in permutations(range(1, 6)):
    code = psi_inv(p)
    assert psi(code) == p and sum(code) == major_index(p)
print("120 permutations checked")

# image of the co-lex smallest code has a closed form and squares to identity
for k in (1, 5, 13, 20):
    a = alpha(8, k)
    print(k, min_colex(k, 8), a)
    assert a == psi(min_colex(k, 8))
    assert compose(a, a) == tuple(range(1, 9))
