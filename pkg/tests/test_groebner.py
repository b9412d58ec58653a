import json
import random

import pytest

from hkforge import (
    DegRevLex,
    Ideal,
    Lex,
    PolyRing,
    ZeroPolynomial,
    buchberger,
    certify_groebner,
    s_polynomial,
)
from hkforge.lengths import oracle_ideal_member
from hkforge.verify import aux_saturation_basis

from helpers import random_nonzero_polynomial, random_polynomial


@pytest.fixture
def lex5():
    return PolyRing(5, ("s", "x", "y"), Lex())


def construction_ideal(ring, n):
    s, x, y = ring.gens()
    g = x * y * (x - y) * (x + y - s * y)
    return Ideal(ring, [x**n, y**n, g]), g


# -- S-polynomials ------------------------------------------------------------

def test_spoly_of_monomials_vanishes(lex5):
    s, x, y = lex5.gens()
    assert s_polynomial(x**4, x * y**2).is_zero()
    assert s_polynomial(s**2 * x, y**5).is_zero()


def test_spoly_with_itself_vanishes(lex5):
    f = lex5.parse("x^2 + 3*y")
    assert s_polynomial(f, f).is_zero()


def test_spoly_zero_input_raises(lex5):
    with pytest.raises(ZeroPolynomial):
        s_polynomial(lex5.zero(), lex5.one())


def test_spoly_of_xn_and_g(lex5):
    """S(x^9, g) = -s x^8 y^3 - x^10 y + x^8 y^3 under lex(s > x > y)."""
    s, x, y = lex5.gens()
    _, g = construction_ideal(lex5, 9)
    expected = -(s * x**8 * y**3) - x**10 * y + x**8 * y**3
    assert s_polynomial(x**9, g) == expected


def test_spoly_table_for_the_explicit_basis(lex5):
    """All the mixed S-pairs of {g, x^n, x^(n-1)y^3, ..., y^n} in closed form."""
    s, x, y = lex5.gens()
    _, g = construction_ideal(lex5, 9)
    n = 9
    cases = {
        # S(y^n, g)
        tuple((y**n).leading_monomial()): -(s * x * y ** (n + 1))
        - x**3 * y ** (n - 1)
        + x * y ** (n + 1),
        # S(x^3 y^(n-1), g)
        tuple((x**3 * y ** (n - 1)).leading_monomial()): -(s * x**2 * y**n)
        - x**4 * y ** (n - 2)
        + x**2 * y**n,
        # S(x^(n-1) y^3, g)
        tuple((x ** (n - 1) * y**3).leading_monomial()): -(s * x ** (n - 2) * y**4)
        - x**n * y**2
        + x ** (n - 2) * y**4,
    }
    for monomial_exps, expected in cases.items():
        mono = lex5.polynomial({monomial_exps: 1})
        assert s_polynomial(mono, g) == expected
    # the generic middle rung: 4 <= i <= n-2
    for i in range(4, n - 1):
        mono = x**i * y ** (n + 2 - i)
        expected = (
            -(s * x ** (i - 1) * y ** (n + 3 - i))
            - x ** (i + 1) * y ** (n + 1 - i)
            + x ** (i - 1) * y ** (n + 3 - i)
        )
        assert s_polynomial(mono, g) == expected


# -- Buchberger ----------------------------------------------------------------

def test_coprime_generators_are_their_own_basis():
    ring = PolyRing(3, ("x", "y"), Lex())
    x, y = ring.gens()
    basis = buchberger([x, y])
    assert list(basis) == [x, y]
    assert basis.reduced


def test_construction_ideal_basis_leading_monomials(lex5):
    """(x^9, y^9, g) has leads {s x^2 y^2, x^9, x^8 y^3, ..., x^3 y^8, y^9}."""
    ideal, g = construction_ideal(lex5, 9)
    lms = set(ideal.groebner_basis().leading_monomials())
    expected = {(1, 2, 2), (0, 9, 0), (0, 0, 9)}
    expected |= {(0, 9 - j, j + 2) for j in range(1, 7)}
    assert lms == expected


def test_all_zero_input_gives_empty_basis():
    ring = PolyRing(3, ("x", "y"))
    for gens in ([], [ring.zero()], [ring.zero(), ring.zero()]):
        basis = buchberger(gens)
        assert len(basis) == 0 and basis.reduced


def test_buchberger_output_certifies_randomized():
    rng = random.Random(29)
    ring = PolyRing(3, ("x", "y"), Lex())
    for _ in range(15):
        gens = [random_nonzero_polynomial(rng, ring, max_degree=3) for _ in range(2)]
        basis = buchberger(gens)
        cert = certify_groebner(list(basis), basis.order)
        assert cert.ok
        assert cert.check()


def test_reduced_basis_is_unique_under_permutation_and_scaling():
    rng = random.Random(31)
    ring = PolyRing(5, ("x", "y"), Lex())
    for _ in range(10):
        gens = [random_nonzero_polynomial(rng, ring, max_degree=4) for _ in range(3)]
        reference = buchberger(gens)
        shuffled = list(gens)
        rng.shuffle(shuffled)
        scaled = [g.scale(rng.randint(1, 4)) for g in shuffled]
        assert list(buchberger(scaled)) == list(reference)


def test_gebauer_moller_agrees_with_plain_strategy():
    rng = random.Random(37)
    ring = PolyRing(3, ("x", "y", "z"), DegRevLex())
    for _ in range(10):
        gens = [random_nonzero_polynomial(rng, ring, max_degree=3) for _ in range(3)]
        assert list(buchberger(gens)) == list(buchberger(gens, gebauer_moller=True))


# -- certification ----------------------------------------------------------------

def test_explicit_elimination_vector_certifies():
    """The hand-built (n+5)-entry elimination basis (p=3, n=9) passes."""
    aux, entries = aux_saturation_basis(3, 4)
    assert len(entries) == 14
    cert = certify_groebner(entries, aux.order)
    assert cert.ok
    assert cert.check()


def test_certify_counterexample_reports_first_failing_pair():
    ring = PolyRing(5, ("x", "y"), Lex())
    x, y = ring.gens()
    cert = certify_groebner([x**2, x * y + y**2])
    assert not cert.ok
    j, k, remainder = cert.failure
    assert (j, k) == (0, 1)
    assert remainder == y**3
    assert not cert.check()


def test_certify_single_element_is_trivial(lex5):
    cert = certify_groebner([lex5.parse("x^2 + s")])
    assert cert.ok and cert.entries == ()


def test_certificate_json_round_trips():
    ring = PolyRing(3, ("x", "y"), Lex())
    x, y = ring.gens()
    cert = certify_groebner([x**2, y])
    payload = json.loads(cert.to_json())
    assert payload["pass"] is True
    assert payload["order"] == "lex"
    assert len(payload["pairs"]) == 1


# -- membership --------------------------------------------------------------------

def test_membership_construction_cases(lex5):
    s, x, y = lex5.gens()
    ideal, g = construction_ideal(lex5, 9)
    f = lex5.zero()
    for j in range(2, 9):
        f = f + ((-1) ** j) * x ** (10 - j) * y**j
    assert ideal.contains(s * f)
    assert not ideal.contains(f)
    assert ideal.contains(lex5.zero())


def test_ideal_member_function(lex5):
    from hkforge import Ideal, ideal_member

    s, x, y = lex5.gens()
    ideal, g = construction_ideal(lex5, 9)
    assert ideal_member(s * g, ideal)
    assert not ideal_member(s, ideal)


def test_normal_form_rejects_zero_divisor(lex5):
    from hkforge import normal_form

    with pytest.raises(ZeroPolynomial):
        normal_form(lex5.gen("x"), [lex5.zero()])


def test_membership_agrees_with_linear_algebra_oracle():
    rng = random.Random(41)
    ring = PolyRing(3, ("x", "y"))
    for _ in range(20):
        gens = [random_nonzero_polynomial(rng, ring, max_degree=3) for _ in range(2)]
        ideal = Ideal(ring, gens)
        probe = random_polynomial(rng, ring, max_degree=3)
        # make half of the probes certain members
        if rng.random() < 0.5:
            probe = gens[0] * probe
        assert ideal.contains(probe) == oracle_ideal_member(probe, ideal)
