"""The numerical sequences: hk, rjj, sjj, vjj, l_e/f_e, and the sandwich.

Every sequence is a finite prefix of exact integers raw_e with the exact
rational raw_e / q^d alongside; nothing is extrapolated.  The sandwich
inequality

    len(I^[p^n]/J^[p^n])  <=  f_n(J) - f_n(I)  <=  sum_j len(I^[p^j]/J^[p^j])

cross-checks the torsion-layer route against plain length differences.
"""

from hkforge import (
    Ideal,
    PolyRing,
    check_sandwich,
    f_difference_sequence,
    hk_function,
    lf_sequences,
    maximal_ideal,
    rjj_sequence,
    sjj_sequence,
    vjj_sequence,
)

ring = PolyRing(3, ("x", "y"))
x, y = ring.gens()
m_ideal = maximal_ideal(ring)

# Hilbert-Kunz function of the maximal ideal in a regular ring: exactly q^2.
print(hk_function(m_ideal, 3, d=2).to_csv())

# A pair with distinct tight closures: J = (x^3, y^3) inside I = (x, y)^3.
# The f-difference stays at the constant 3 after scaling: it does not vanish.
j_ideal = Ideal(ring, [x**3, y**3])
i_ideal = m_ideal**3
print()
print(f_difference_sequence(j_ideal, i_ideal, 2, d=2).to_csv())

# rjj for an m-primary pair is just the colength difference; sjj agrees there.
print()
print(rjj_sequence(j_ideal, i_ideal, 2, d=2).to_csv())
print()
print(sjj_sequence(j_ideal, i_ideal, 2, d=2).to_csv())

# vjj replaces J by J + m*I, which Nakayama-style detects the same closure.
print()
print(vjj_sequence(j_ideal, i_ideal, 2, d=2).to_csv())

# The torsion layers of the maximal ideal: l_e = (p^2 - 1) p^(2e) here, and
# the prefix sums recover the Hilbert-Kunz values.
l_values, f_values = lf_sequences(m_ideal, 3)
print("\nl_(-1), l_0, ... =", l_values)
print("f_0, f_1, ...     =", f_values)

# The sandwich at n = 1 and n = 2, exact integers.
for n in (1, 2):
    record = check_sandwich(j_ideal, i_ideal, n)
    print(f"\nsandwich at n={n}: {record.lower} <= {record.middle} <= {record.upper}",
          "holds:", record.holds)
