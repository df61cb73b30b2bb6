"""
Bicharacters, normalization and the braid relation
==================================================

A bicharacter eps on an abelian group G is multiplicative in each slot.
Here it is given as eps(a, b) = (-1)^(a|b) q^<a|b>.  It twists the flip
u (x) v -> v (x) u into a braiding; we check the axioms and the braid
relation exhaustively on small groups.
"""

from gradedsym import (
    Biform,
    Bicharacter,
    CommutationTable,
    GroupSpec,
    Phase,
    flux_bicharacter,
    reduce_grading_group,
    single_particle_basis,
    verify_bicharacter,
    verify_normalized,
    verify_ybe,
)
from gradedsym.phase import MINUS_ONE

###############################################################################
# The flux-model bicharacter for N = 4 lives on (Z_2)^4.
e = flux_bicharacter(4)
print(e.spec)
for row in e.generator_table():
    print("  ", " ".join(f"{p.pretty():>3}" for p in row))

print(verify_bicharacter(e).to_json())
print(verify_normalized(e).to_json())
print(verify_ybe(e, single_particle_basis(e.spec)).to_json())

###############################################################################
# A q-deformed example: q = exp(2 pi i / 3) on (Z_3)^2, the group q reduces
# the free grading to.
G = reduce_grading_group(3, 2)
e3 = Bicharacter(G, Biform.zeros(2, "symmetric"), Biform([[0, 1], [-1, 0]], "skew"), Phase(1, 3))
s1, s2 = G.sigma(1), G.sigma(2)
print("\neps(s1, s2) =", e3(s1, s2), " eps(s2, s1) =", e3(s2, s1))
print("exhaustive bicharacter check:", verify_bicharacter(e3).passed,
      "over", verify_bicharacter(e3).checked, "triples")

###############################################################################
# Break one value by hand and the verifier points at the offending triple.
broken = CommutationTable(e3, {(s1, s1 + s2): e3(s1, s1 + s2) * MINUS_ONE})
report = verify_bicharacter(broken)
print("\ncorrupted table passes?", report.passed)
print("first witness:", report.witnesses[0])

###############################################################################
# An odd symmetric form cannot live on Z_3: the constructor refuses it.
try:
    Bicharacter(GroupSpec.cyclic(3, 1), Biform([[1]], "symmetric"), Biform.zeros(1, "skew"))
except ValueError as exc:
    print("\nrejected:", exc)
