"""Truth tables, algebraic normal form and the three single-variable expansions.

Run: python3 demos/01_anf_and_decompositions.py
"""

from revdecomp.boolfn import (
    NEGATIVE_DAVIO,
    POSITIVE_DAVIO,
    SHANNON,
    TruthTable,
    anf_from_tt,
    decompose,
    recompose,
    tt_from_anf,
)

# Majority of three inputs; x1 is the least significant bit of the row index.
maj = TruthTable.from_callable(3, lambda a: bin(a).count("1") >= 2)
print("truth table:", maj.to_hex())

anf = anf_from_tt(maj)
print("ANF:        ", anf)
assert tt_from_anf(anf) == maj

# Each expansion splits f on x1 into two parts that rebuild it exactly.
for variant in (SHANNON, POSITIVE_DAVIO, NEGATIVE_DAVIO):
    parts = decompose(anf, 1, variant)
    print(f"{variant:>15}: part0 = {parts.part0}   part1 = {parts.part1}")
    assert recompose(parts) == anf
