"""Lengths of finite-length quotients and 0th local cohomology at (all variables).

Three measurement routes, kept deliberately independent of each other:

* standard-monomial counting for finite-colength ideals (the initial ideal
  must contain a pure power of every variable; the count is taken over the
  resulting finite exponent box);
* subquotient measurement for (U + J)/J: find the least n with m^n * U <= J,
  then take the rank over F_p of the normal forms of all small multiples of
  the generators of U;
* a brute-force oracle that never looks at Groebner bases: Gaussian
  elimination on raw multiples of the generators, degree-bounded.

Gamma_m is realized on ideals: Gamma_m(I/J) = H/J for
H = (J : m^infinity) ∩ I.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import config
from .errors import CapExceeded, ContainmentError
from .ideals import Ideal, intersect, maximal_ideal, saturate
from .linalg import in_row_span, rank, rank_of_rows
from .polyring import Monomial, PolyRing, Polynomial

__all__ = [
    "LengthResult",
    "finite_colength_length",
    "gamma_submodule",
    "subquotient_length",
    "gamma_length",
    "oracle_quotient_dimension",
    "oracle_ideal_member",
]


@dataclass(frozen=True)
class LengthResult:
    """A length, or the verdict that none exists.

    `method` records which route produced the number: "standard-monomials",
    "subquotient", or "oracle".  When `finite` is False, `value` is None.
    """

    value: int | None
    finite: bool
    method: str
    note: str | None = None

    def expect(self) -> int:
        if not self.finite:
            raise ValueError(f"length is not finite: {self.note or 'no value'}")
        return self.value

    def __int__(self) -> int:
        return self.expect()


# ---------------------------------------------------------------------------
# standard monomials

def _pure_power_bounds(lms: list[Monomial], nvars: int) -> list[int] | None:
    """Minimal pure-power exponents per variable among `lms`, or None if some
    variable has no pure power (infinite colength)."""
    bounds: list[int | None] = [None] * nvars
    for lm in lms:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or lm[i] < bounds[i]:
                bounds[i] = lm[i]
    if any(b is None for b in bounds):
        return None
    return bounds


def count_standard_monomials(lms: list[Monomial], nvars: int) -> int | None:
    """Number of monomials outside the monomial ideal generated by `lms`,
    or None when that number is infinite."""
    if any(not any(lm) for lm in lms):
        return 0  # the unit ideal
    bounds = _pure_power_bounds(lms, nvars)
    if bounds is None:
        return None
    volume = 1
    for b in bounds:
        volume *= b
    if volume > 1 << 28:
        raise CapExceeded(
            f"standard-monomial box has {volume} cells; exponents are too large"
        )
    grid = np.zeros(tuple(bounds), dtype=bool)
    for lm in lms:
        # slices past the box are empty, so out-of-box generators are no-ops
        grid[tuple(slice(e, None) for e in lm)] = True
    return int(grid.size - grid.sum())


def finite_colength_length(ideal: Ideal) -> LengthResult:
    """len(R/I) by standard-monomial count; finite=False when unbounded."""
    basis = ideal.groebner_basis()
    if not len(basis):
        return LengthResult(None, False, "standard-monomials", "zero ideal")
    lms = list(basis.leading_monomials())
    count = count_standard_monomials(lms, ideal.ring.nvars)
    if count is None:
        return LengthResult(
            None, False, "standard-monomials", "no pure power of some variable"
        )
    return LengthResult(count, True, "standard-monomials")


# ---------------------------------------------------------------------------
# local cohomology submodule

def gamma_submodule(j_ideal: Ideal, i_ideal: Ideal) -> Ideal:
    """H with Gamma_m(I/J) = H/J, namely H = (J : m^infinity) ∩ I.

    Needs J <= I.  When J already has finite colength the whole quotient is
    m-power torsion and H = I without any saturation work.
    """
    if not i_ideal.contains_ideal(j_ideal):
        raise ContainmentError("gamma_submodule requires J <= I")
    if finite_colength_length(j_ideal).finite:
        return i_ideal
    sat, _ = saturate(j_ideal, maximal_ideal(j_ideal.ring))
    if i_ideal.is_unit():
        return sat
    return intersect(sat, i_ideal)


# ---------------------------------------------------------------------------
# subquotient length

def _monomials_of_degree(ring: PolyRing, degree: int) -> list[Monomial]:
    if degree == 0:
        return [(0,) * ring.nvars]
    out = []
    for combo in itertools.combinations_with_replacement(range(ring.nvars), degree):
        mon = [0] * ring.nvars
        for i in combo:
            mon[i] += 1
        out.append(tuple(mon))
    return sorted(out)


def nilpotency_exponent(u_ideal: Ideal, j_ideal: Ideal, cap: int) -> int | None:
    """Least n <= cap with m^n * U <= J, or None if the cap is exhausted."""
    basis = j_ideal.groebner_basis()
    ring = j_ideal.ring
    gens = u_ideal.generators
    for n in range(cap + 1):
        mons = _monomials_of_degree(ring, n)
        if all(
            basis.contains(u.mul_term(mon, 1)) for u in gens for mon in mons
        ):
            return n
    return None


def subquotient_length(
    u_ideal: Ideal,
    j_ideal: Ideal,
    *,
    method: str = "auto",
    nilpotency_cap: int | None = None,
) -> LengthResult:
    """len((U + J)/J) for J <= U, when finite.

    "rank": find the least n with m^n U <= J, then rank over F_p of the
    normal forms of {mu * u : deg mu < n, u generator of U} in the
    standard-monomial coordinates of J.  "difference": when both colengths
    are finite, additivity gives len(R/J) - len(R/U) directly.  "auto" takes
    the difference route when available.
    """
    if method not in {"auto", "rank", "difference"}:
        raise ValueError(f"unknown method {method!r}")
    if not u_ideal.contains_ideal(j_ideal):
        raise ContainmentError("subquotient_length requires J <= U")
    if method != "rank":
        len_j = finite_colength_length(j_ideal)
        if len_j.finite:
            len_u = finite_colength_length(u_ideal)
            if len_u.finite:
                return LengthResult(
                    len_j.value - len_u.value, True, "standard-monomials"
                )
        if method == "difference":
            return LengthResult(
                None, False, "standard-monomials", "a colength is not finite"
            )

    cap = nilpotency_cap if nilpotency_cap is not None else config.DEFAULT_NILPOTENCY_CAP
    n = nilpotency_exponent(u_ideal, j_ideal, cap)
    if n is None:
        return LengthResult(
            None,
            False,
            "subquotient",
            f"possibly infinite length: no n <= {cap} with m^n U <= J",
        )
    basis = j_ideal.groebner_basis()
    ring = j_ideal.ring
    rows = []
    for d in range(n):
        for mon in _monomials_of_degree(ring, d):
            for u in u_ideal.generators:
                nf = basis.reduce(u.mul_term(mon, 1))
                if not nf.is_zero():
                    rows.append(nf.as_dict())
    columns = sorted(
        {m for row in rows for m in row}, key=ring.order.key, reverse=True
    )
    return LengthResult(rank_of_rows(rows, columns, ring.p), True, "subquotient")


def gamma_length(j_ideal: Ideal, i_ideal: Ideal, **kw) -> LengthResult:
    """len(Gamma_m(I/J)); always finite for Noetherian inputs."""
    h = gamma_submodule(j_ideal, i_ideal)
    return subquotient_length(h, j_ideal, **kw)


# ---------------------------------------------------------------------------
# brute-force oracles (no Groebner bases anywhere below)

def _monomials_up_to(ring: PolyRing, degree: int) -> list[Monomial]:
    out = []
    for d in range(degree + 1):
        out.extend(_monomials_of_degree(ring, d))
    return out


def _span_matrix(ideal: Ideal, degree_bound: int, columns: dict[Monomial, int]):
    rows = []
    for g in ideal.generators:
        room = degree_bound - g.total_degree()
        if room < 0:
            continue
        for mon in _monomials_up_to(ideal.ring, room):
            shifted = g.mul_term(mon, 1)
            row = np.zeros(len(columns), dtype=np.int64)
            for m, c in shifted.terms:
                row[columns[m]] = c
            rows.append(row)
    if not rows:
        return np.zeros((0, len(columns)), dtype=np.int64)
    return np.vstack(rows)


def oracle_quotient_dimension(ideal: Ideal, degree_bound: int) -> int:
    """dim over F_p of (monomials of degree <= bound) modulo the span of all
    generator multiples of degree <= bound, by Gaussian elimination.

    For a finite-colength ideal this stabilizes to len(R/I) as the bound
    grows.  Entirely independent of the Groebner machinery.
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be non-negative")
    mons = _monomials_up_to(ideal.ring, degree_bound)
    columns = {m: i for i, m in enumerate(mons)}
    matrix = _span_matrix(ideal, degree_bound, columns)
    return len(mons) - rank(matrix, ideal.ring.p)


def oracle_ideal_member(
    f: Polynomial, ideal: Ideal, *, slack: int = 2, max_rounds: int = 5
) -> bool:
    """Membership by linear algebra: is f in the span of generator multiples
    of degree <= deg(f) + slack?  The bound is raised until two consecutive
    answers agree.  Sound for positives; negatives are as reliable as the
    final degree window."""
    if f.is_zero():
        return True
    base = f.total_degree()
    previous = None
    for round_ in range(max_rounds):
        bound = base + slack + round_
        mons = _monomials_up_to(ideal.ring, bound)
        columns = {m: i for i, m in enumerate(mons)}
        matrix = _span_matrix(ideal, bound, columns)
        vec = np.zeros(len(mons), dtype=np.int64)
        for m, c in f.terms:
            vec[columns[m]] = c
        answer = in_row_span(matrix, vec, ideal.ring.p)
        if answer:
            return True
        if previous is not None and previous == answer:
            return answer
        previous = answer
    return previous if previous is not None else False
