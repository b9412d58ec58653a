"""The Katzman-style nested pair: both a prime and the maximal ideal stay
associated to I^[q]/J^[q] for every q, yet the torsion stays bounded.

Work in R = F_p[s, x, y]/(g) with J = (x^p, y^p) and I = (x, y)^p.  For every
q = p^e the element z (the alternating binomial sum f) lies in I^[q] but not
in J^[q], and (J^[q] : z) is the whole maximal ideal, so m is associated to
I^[q]/J^[q]; a monomial witness shows (x, y) is associated too.  Still,
len Gamma_m(I^[q]/J^[q]) = 1 for all computed q, so the scaled torsion
sequence rjj collapses to zero: the pair shares its tight closure even though
no finite-length argument applies.
"""

from hkforge import Ideal, Lex, PolyRing, rjj_sequence, window_bound_check
from hkforge.verify import verify_katzman

report = verify_katzman(3, 1)
print("checks at p=3, e=1:")
for claim in report.claims:
    print(f"  [{'ok' if claim.passed else 'FAIL'}] {claim.label}: {claim.detail}")

# The full rjj window, computed modulo the hypersurface.
ring = PolyRing(3, ("s", "x", "y"), Lex())
s, x, y = ring.gens()
g = x * y * (x - y) * (x + y - s * y)
j_ideal = Ideal(ring, [x**3, y**3])
i_ideal = Ideal(ring, [x, y]) ** 3

window = rjj_sequence(j_ideal, i_ideal, 2, d=2, hypersurface=g)
print("\nrjj rows (raw is len Gamma_m(I^[q]/J^[q])):")
print(window.to_csv())
print("\nboundedness probe:", window_bound_check(window))
