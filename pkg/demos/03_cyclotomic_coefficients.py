"""
Exact cyclotomic coefficients
=============================

When q is a primitive m-th root of unity the algebra's structure constants
are powers of zeta_m.  Coefficients are kept in Z[zeta_m] modulo the
cyclotomic polynomial, so cancellations such as 1 + zeta_3 + zeta_3^2 = 0
are exact.
"""

import cmath

from gradedsym import Biform, Bicharacter, CycInt, GroupSpec, Phase, cyclotomic_polynomial, new_graded_algebra

###############################################################################
# Cyclotomic polynomials by exact division of x^m - 1.
for m in (1, 2, 3, 4, 6, 12):
    print(f"Phi_{m:<2} coefficients (low to high):", cyclotomic_polynomial(m))

z = CycInt.zeta(3)
print("\n1 + z3 + z3^2 =", 1 + z + z * z)
print("z12^7 =", CycInt.zeta(12, 7), "~", complex(CycInt.zeta(12, 7)))

###############################################################################
# A quantum plane: Theta_2 Theta_1 = zeta_3^2 Theta_1 Theta_2.
G = GroupSpec.free(2)
e = Bicharacter(G, Biform.zeros(2, "symmetric"), Biform([[0, 1], [-1, 0]], "skew"), Phase(1, 3))
A = new_graded_algebra(e)
x, y = A.theta(1), A.theta(2)
print("\ny x =", y * x)
print("y x x =", y * x * x)
print("(x + y)^3 =", (x + y) * (x + y) * (x + y))

# q-binomial coefficients vanish at a primitive cube root of unity:
# (x + y)^3 = x^3 + y^3 exactly.
print("equals x^3 + y^3:", (x + y) * (x + y) * (x + y) == x * x * x + y * y * y)

###############################################################################
# Floating cross-check of one coefficient.
c = next(iter((y * x).terms.values()))
print("numeric:", complex(c), "expected:", cmath.exp(-2j * cmath.pi / 3))
