"""Compare the transformation-based and Young-subgroup/ESOP synthesizers on permutations.

Run: python3 demos/03_permutation_baselines.py
"""

import numpy as np

from revdecomp.baselines import esop_young_synthesize, mmd_synthesize, young_decompose
from revdecomp.bounds import bound_mmd_mct
from revdecomp.circuit import Permutation, permutation_of

rng = np.random.default_rng(1)
for n in (3, 4, 5, 6):
    p = Permutation.random(n, rng)
    mmd = mmd_synthesize(p)
    esop = esop_young_synthesize(p)
    assert permutation_of(mmd) == p and permutation_of(esop) == p
    stgs = young_decompose(p)
    print(f"n={n}: MMD {len(mmd.gates):4d} gates (bound {bound_mmd_mct(n)}), "
          f"Young {len(stgs)} single-target gates -> {len(esop.gates):4d} MPMCT gates")

# The single-target gates of a small example, with their control functions.
p = Permutation(3, [1, 0, 3, 2, 5, 7, 4, 6])
for g in young_decompose(p):
    if not g.is_trivial():
        print(f"  target x{g.target_var} ^= {g.control}")
