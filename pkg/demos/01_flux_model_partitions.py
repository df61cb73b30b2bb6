"""
Quasiparticle partitions in the flux model
==========================================

Charged particles in a magnetic field concentrated in N flux lines, with n
particles per N fluxes (filling factor v = n/N).  Each generator
Theta[i]^a binds flux i to particle a; a product of generators is a
partition of quasiparticles and quasiholes.  Partitions with a pair of
anticommuting factors are thrown out.
"""

from gradedsym import new_flux_algebra

###############################################################################
# Half filling: N = 2 fluxes, one particle.  The two generators commute and
# square to zero.
A = new_flux_algebra(2, 1)
t1, t2 = A.theta(1), A.theta(2)
print("v =", A.filling_factor())
print("T1 T2 - T2 T1 =", t1 * t2 - t2 * t1)
print("T1 T1         =", t1 * t1)

for p in A.enumerate_partitions(admissible_only=True):
    print(f"  {p.monomial.word and ' '.join(g.label() for g in p.monomial.word) or '1':<22}"
          f" quasiparticles={p.quasiparticles} quasiholes={p.quasiholes}")

###############################################################################
# v = 1/3: every pair anticommutes, so only single-quasiparticle partitions
# survive.
A = new_flux_algebra(3, 1)
print("\nv =", A.filling_factor())
print("T2 T1 =", A.theta(2) * A.theta(1))
survivors = A.enumerate_partitions(admissible_only=True)
print("admissible:", [" ".join(g.label() for g in p.monomial.word) or "1" for p in survivors])

###############################################################################
# v = 2/3: two particles.  Generators on different fluxes *and* different
# particles commute, so exactly six two-quasiparticle partitions survive.
A = new_flux_algebra(3, 2)
print("\nv =", A.filling_factor())
for rel in A.relations()[:5]:
    print(f"  [{rel.group}] {rel.left.label(2)} {rel.right.label(2)} = "
          f"{rel.phase.pretty()} {rel.right.label(2)} {rel.left.label(2)}")
pairs = A.enumerate_partitions(admissible_only=True, degree=2)
print(len(pairs), "admissible pairs:")
for p in pairs:
    print("  ", " ".join(g.label(2) for g in p.monomial.word), "quasiholes =", p.quasiholes)

###############################################################################
# Larger odd N behave like N = 3 at n = 1: only the unit and single
# generators are admissible.
for N in (5, 7):
    ok = new_flux_algebra(N, 1).enumerate_partitions(admissible_only=True)
    print(f"N={N}: {len(ok)} admissible partitions")
