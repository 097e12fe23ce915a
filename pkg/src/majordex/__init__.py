"""Gray codes for fixed-weight subexcedant sequences and for permutations
with a given major index, generated in constant amortized time."""

from .colexgen import colex_list, gen_colex, increasable_positions
from .graygen import DeltaEmission, gen1_gray, gen2_gray, gray_list, reconstruct
from .mcmahon import McMahonState, alpha, compose, phi, psi, psi_inv, rotation
from .oracle import mahonian
from .permgen import PermEmission, gen_perm_major, perm_list, update_perm
from .seqcore import (
    BoundingSequence,
    Composition,
    Permutation,
    SubexcedantSeq,
    are_close,
    difference_and_pivot,
    is_bounded,
    is_subexcedant,
    major_index,
    min_colex,
    weight,
)

__version__ = "0.1.0"
