import random

import pytest

from hkforge import (
    ContainmentError,
    Ideal,
    Lex,
    PolyRing,
    bracket_power,
    colon_ideal,
    finite_colength_length,
    gamma_length,
    gamma_submodule,
    ideal_equal,
    maximal_ideal,
    oracle_quotient_dimension,
    subquotient_length,
    unit_ideal,
)
from hkforge.verify import build_construction

from helpers import random_monomial_ideal, random_primary_pair


@pytest.fixture
def f5xy():
    return PolyRing(5, ("x", "y"))


# -- finite colength --------------------------------------------------------------

def test_box_count(f5xy):
    x, y = f5xy.gens()
    result = finite_colength_length(Ideal(f5xy, [x**2, y**3]))
    assert result.finite and result.value == 6
    assert result.method == "standard-monomials"


def test_bracketed_maximal_ideal_counts_q_squared(f5xy):
    for e in range(3):
        q = 5**e
        length = finite_colength_length(bracket_power(maximal_ideal(f5xy), e))
        assert length.value == q * q


def test_missing_pure_power_is_infinite():
    data = build_construction(5, 4)
    result = finite_colength_length(data.e)
    assert not result.finite
    assert result.value is None
    with pytest.raises(ValueError):
        result.expect()


def test_unit_ideal_has_length_zero(f5xy):
    assert finite_colength_length(unit_ideal(f5xy)).value == 0


# -- the brute-force oracle ----------------------------------------------------------

def test_oracle_simple_box(f5xy):
    x, y = f5xy.gens()
    assert oracle_quotient_dimension(Ideal(f5xy, [x**2, y**3]), 10) == 6


def test_oracle_degree_zero(f5xy):
    assert oracle_quotient_dimension(maximal_ideal(f5xy), 0) == 1


def test_oracle_stabilizes_to_box_count():
    rng = random.Random(71)
    for p in (3, 5):
        for nvars in (2, 3):
            ring = PolyRing(p, tuple("xyz"[:nvars]))
            for _ in range(5):
                ideal = random_monomial_ideal(rng, ring, max_degree=4)
                expected = finite_colength_length(ideal).expect()
                bound = 4 * nvars
                stable = oracle_quotient_dimension(ideal, bound)
                assert stable == oracle_quotient_dimension(ideal, bound + 1)
                assert stable == expected


# -- gamma submodule -------------------------------------------------------------------

def test_gamma_submodule_of_construction_is_h():
    data = build_construction(5, 4)
    h = gamma_submodule(data.e, unit_ideal(data.ring))
    assert ideal_equal(h, data.h)


def test_gamma_submodule_equal_pair(f5xy):
    x, y = f5xy.gens()
    ideal = Ideal(f5xy, [x**2, y])
    assert ideal_equal(gamma_submodule(ideal, ideal), ideal)


def test_gamma_submodule_x_column(f5xy):
    """(x^2, xy) saturates to (x): iterated colon by (x, y) stabilizes there."""
    x, y = f5xy.gens()
    j_ideal = Ideal(f5xy, [x**2, x * y])
    h = gamma_submodule(j_ideal, unit_ideal(f5xy))
    assert ideal_equal(h, Ideal(f5xy, [x]))
    # iterate-the-colon oracle, no saturate() involved
    step1 = colon_ideal(j_ideal, maximal_ideal(f5xy))
    step2 = colon_ideal(step1, maximal_ideal(f5xy))
    assert ideal_equal(step1, step2)
    assert ideal_equal(step1, h)


def test_gamma_submodule_requires_containment(f5xy):
    x, y = f5xy.gens()
    with pytest.raises(ContainmentError):
        gamma_submodule(Ideal(f5xy, [x]), Ideal(f5xy, [y]))


def test_gamma_fast_path_matches_saturation_route(f5xy):
    """For m-primary J the shortcut H = I must agree with the saturation formula."""
    from hkforge.ideals import intersect, saturate

    rng = random.Random(73)
    for _ in range(5):
        j_ideal, i_ideal = random_primary_pair(rng, f5xy, max_degree=3)
        h = gamma_submodule(j_ideal, i_ideal)
        sat, _ = saturate(j_ideal, maximal_ideal(f5xy))
        assert ideal_equal(h, intersect(sat, i_ideal))


# -- subquotient lengths ------------------------------------------------------------------

def test_torsion_of_construction_quotient_is_one():
    data = build_construction(5, 4)
    assert subquotient_length(data.h, data.e).expect() == 1


def test_subquotient_of_equal_ideals_is_zero(f5xy):
    x, y = f5xy.gens()
    ideal = Ideal(f5xy, [x**3, y**2])
    for method in ("auto", "rank"):
        assert subquotient_length(ideal, ideal, method=method).expect() == 0


def test_x_mod_x2_xy_has_length_one(f5xy):
    x, y = f5xy.gens()
    result = subquotient_length(Ideal(f5xy, [x]), Ideal(f5xy, [x**2, x * y]), method="rank")
    assert result.expect() == 1
    assert result.method == "subquotient"


def test_rank_and_difference_methods_agree(f5xy):
    rng = random.Random(79)
    for _ in range(10):
        j_ideal, i_ideal = random_primary_pair(rng, f5xy, max_degree=3)
        by_rank = subquotient_length(i_ideal, j_ideal, method="rank").expect()
        by_diff = subquotient_length(i_ideal, j_ideal, method="difference").expect()
        assert by_rank == by_diff


def test_additivity_of_length(f5xy):
    """len(U/J) + len(R/U) == len(R/J), with len(U/J) from the rank route."""
    rng = random.Random(83)
    for _ in range(10):
        j_ideal, u_ideal = random_primary_pair(rng, f5xy, max_degree=3)
        left = subquotient_length(u_ideal, j_ideal, method="rank").expect()
        assert (
            left + finite_colength_length(u_ideal).expect()
            == finite_colength_length(j_ideal).expect()
        )


def test_subquotient_detects_possibly_infinite(f5xy):
    x, y = f5xy.gens()
    result = subquotient_length(
        Ideal(f5xy, [x]), Ideal(f5xy, [x**2]), nilpotency_cap=12
    )
    assert not result.finite
    assert "infinite" in result.note


def test_subquotient_requires_containment(f5xy):
    x, y = f5xy.gens()
    with pytest.raises(ContainmentError):
        subquotient_length(Ideal(f5xy, [x**2]), Ideal(f5xy, [y]))


# -- gamma length ---------------------------------------------------------------------------

def test_gamma_length_of_construction():
    data = build_construction(5, 4)
    assert gamma_length(data.e, unit_ideal(data.ring)).expect() == 1


def test_gamma_length_equal_pair_is_zero(f5xy):
    ideal = Ideal(f5xy, [f5xy.gen("x")])
    assert gamma_length(ideal, ideal).expect() == 0


def test_gamma_length_katzman_level_one():
    p = 3
    ring = PolyRing(p, ("s", "x", "y"), Lex())
    s, x, y = ring.gens()
    g = Ideal(ring, [x * y * (x - y) * (x + y - s * y)])
    j_q = bracket_power(Ideal(ring, [x**p, y**p]), 1) + g
    i_q = bracket_power(Ideal(ring, [x, y]) ** p, 1) + g
    assert gamma_length(j_q, i_q).expect() == 1


def test_gamma_length_monotone_in_numerator(f5xy):
    rng = random.Random(89)
    for _ in range(8):
        j_ideal, i_ideal = random_primary_pair(rng, f5xy, max_degree=3)
        bigger = i_ideal + Ideal(f5xy, [f5xy.gen("x") ** rng.randint(1, 3)])
        small = gamma_length(j_ideal, i_ideal).expect()
        large = gamma_length(j_ideal, bigger).expect()
        assert small <= large


def test_gamma_length_primary_case_matches_oracle(f5xy):
    """m-primary J: the whole quotient is torsion, so Gamma-length equals the
    difference of oracle quotient dimensions."""
    rng = random.Random(97)
    for _ in range(6):
        j_ideal, i_ideal = random_primary_pair(rng, f5xy, max_degree=3)
        value = gamma_length(j_ideal, i_ideal, method="rank").expect()
        bound = 14
        by_oracle = oracle_quotient_dimension(j_ideal, bound) - oracle_quotient_dimension(
            i_ideal, bound
        )
        assert value == by_oracle
