"""Buchberger's algorithm, reduced Groebner bases, and certification.

The certification path re-derives division certificates for every S-pair
rather than trusting any precomputed table: a basis is certified exactly when
every S-polynomial divides to zero, and the recorded quotients then satisfy
the leading-monomial bound automatically, because the division algorithm never
rewrites above the dividend's lead.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from typing import Sequence

from .errors import ZeroPolynomial
from .polyring import (
    DegRevLex,
    Monomial,
    MonomialOrder,
    Polynomial,
    _reduce_sorted,
    division,
    divisor_table,
    monomial_div,
    monomial_lcm,
    monomial_mul,
    normal_form,
)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """The cancellation combination (lcm/lt(f))*f - (lcm/lt(g))*g.

    The lcm is taken of the two leading *terms*, its coefficient being the
    product of the leading coefficients, so S(f, g) of monic inputs matches
    the textbook monomial-lcm form and the sign is fixed for non-monic inputs.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("S-polynomial of a zero polynomial")
    if order is None:
        order = f.ring.order
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    lcm = monomial_lcm(mf, mg)
    tf = monomial_div(lcm, mf)
    tg = monomial_div(lcm, mg)
    return f.mul_term(tf, cg) - g.mul_term(tg, cf)


@dataclass(frozen=True)
class GroebnerBasis:
    """A Groebner basis under `order`; elements monic and lm-descending when reduced."""

    elements: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = False

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i: int) -> Polynomial:
        return self.elements[i]

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading_monomial(self.order) for g in self.elements)

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of f against this basis."""
        return normal_form(f, self.elements, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def frobenius(self, e: int) -> "GroebnerBasis":
        """Bracket the basis: over F_p, g -> g^(p^e) maps a (reduced) Groebner
        basis of I to one of the bracket power of I, because exponent scaling
        preserves every divisibility and order comparison and fixes all
        coefficients."""
        return GroebnerBasis(
            tuple(g.frobenius(e) for g in self.elements), self.order, self.reduced
        )


def _spoly_terms(fi, fj, p, key):
    """S-polynomial on reducer-table entries (lm, lc_inv, terms) -> sorted terms."""
    lm_i, _, terms_i = fi
    lm_j, _, terms_j = fj
    lcm = monomial_lcm(lm_i, lm_j)
    ti = monomial_div(lcm, lm_i)
    tj = monomial_div(lcm, lm_j)
    ci = terms_i[0][1]
    cj = terms_j[0][1]
    # (cj * x^ti) * f_i - (ci * x^tj) * f_j, merged descending
    out = []
    left = [(monomial_mul(m, ti), c * cj % p) for m, c in terms_i]
    right = [(monomial_mul(m, tj), c * ci % p) for m, c in terms_j]
    i = j = 0
    while i < len(left) and j < len(right):
        ml, cl = left[i]
        mr, cr = right[j]
        kl, kr = key(ml), key(mr)
        if kl > kr:
            out.append((ml, cl))
            i += 1
        elif kl < kr:
            out.append((mr, -cr % p))
            j += 1
        else:
            c = (cl - cr) % p
            if c:
                out.append((ml, c))
            i += 1
            j += 1
    out.extend(left[i:])
    out.extend((m, -c % p) for m, c in right[j:])
    return out


def _gm_update(lms, active, pairs, h):
    """Gebauer-Moeller pair update on adding element index h.

    Applies the standard chain and coprimality criteria to prune the pair set,
    then retires active elements whose lead became divisible by lm(h).
    """
    mh = lms[h]
    candidates = sorted(active)
    surviving = []
    for ig in candidates:
        lcm_hg = monomial_lcm(mh, lms[ig])
        def dominated(ip):
            m = monomial_lcm(mh, lms[ip])
            return m != lcm_hg and monomial_div(lcm_hg, m) is not None

        if monomial_mul(mh, lms[ig]) == lcm_hg:
            # coprime leads: S-pair reduces to zero, but it may still justify
            # dropping other pairs, so handle after the divisibility pass
            surviving.append((ig, True))
        elif not any(dominated(ip) for ip, _ in surviving) and not any(
            dominated(ip) for ip in candidates[candidates.index(ig) + 1 :]
        ):
            surviving.append((ig, False))
    new_pairs = [(ig, h) for ig, coprime in surviving if not coprime]

    kept = []
    for (i, j) in pairs:
        lcm_ij = monomial_lcm(lms[i], lms[j])
        if (
            monomial_div(lcm_ij, mh) is None
            or monomial_lcm(lms[i], mh) == lcm_ij
            or monomial_lcm(mh, lms[j]) == lcm_ij
        ):
            kept.append((i, j))
    kept.extend(new_pairs)

    still_active = [ig for ig in active if monomial_div(lms[ig], mh) is None]
    still_active.append(h)
    return still_active, kept


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    *,
    gebauer_moller: bool = False,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by `gens`.

    Pair selection follows the normal strategy (smallest lcm of the leading
    monomials under the order); pairs with coprime leads are skipped.  With
    `gebauer_moller=True` the full chain-criterion pair pruning is used
    instead, which matters on the larger elimination ideals.  Either way the
    result is the unique reduced basis: monic elements, no term of one
    divisible by the lead of another, sorted lead-descending.
    """
    live = [g for g in gens if not g.is_zero()]
    if not live:
        return GroebnerBasis((), order or DegRevLex(), reduced=True)
    ring = live[0].ring
    if order is None:
        order = ring.order
    work = ring.with_order(order)
    key = order.key
    p = ring.p
    inv = ring.field.inv

    table = divisor_table([g.resorted(work).monic() for g in live], key, inv)
    lms = [entry[0] for entry in table]

    if gebauer_moller:
        active: list[int] = []
        pairs: list[tuple[int, int]] = []
        seeded = len(table)
        for h in range(seeded):
            active, pairs = _gm_update(lms, active, pairs, h)
        while pairs:
            pick = min(pairs, key=lambda ij: (key(monomial_lcm(lms[ij[0]], lms[ij[1]])), ij))
            pairs.remove(pick)
            i, j = pick
            s = _spoly_terms(table[i], table[j], p, key)
            rem = _reduce_sorted(s, [table[a] for a in active], p, key, None)
            if rem:
                c = inv(rem[0][1])
                rem = [(m, k * c % p) for m, k in rem]
                table.append((rem[0][0], 1, rem))
                lms.append(rem[0][0])
                active, pairs = _gm_update(lms, active, pairs, len(table) - 1)
        basis_terms = [table[a][2] for a in sorted(active)]
    else:
        heap: list[tuple] = []
        for j in range(len(table)):
            for i in range(j):
                heapq.heappush(heap, (key(monomial_lcm(lms[i], lms[j])), i, j))
        while heap:
            lcm_key, i, j = heapq.heappop(heap)
            lcm = monomial_lcm(lms[i], lms[j])
            if lcm == monomial_mul(lms[i], lms[j]):
                continue  # coprime leads reduce to zero
            s = _spoly_terms(table[i], table[j], p, key)
            rem = _reduce_sorted(s, table, p, key, None)
            if rem:
                c = inv(rem[0][1])
                rem = [(m, k * c % p) for m, k in rem]
                h = len(table)
                table.append((rem[0][0], 1, rem))
                lms.append(rem[0][0])
                for i2 in range(h):
                    heapq.heappush(heap, (key(monomial_lcm(lms[i2], lms[h])), i2, h))
        basis_terms = [entry[2] for entry in table]

    reduced = _reduce_basis(basis_terms, p, key, inv)
    elements = tuple(work.polynomial(t) for t in reduced)
    return GroebnerBasis(elements, order, reduced=True)


def _reduce_basis(basis_terms, p, key, inv):
    """Minimalize and tail-reduce term lists into the reduced basis, lm-descending."""
    by_lm = sorted(basis_terms, key=lambda t: key(t[0][0]))
    minimal: list[list] = []
    for terms in by_lm:
        lm = terms[0][0]
        if any(monomial_div(lm, kept[0][0]) is not None for kept in minimal):
            continue
        minimal.append(terms)
    reduced = []
    for idx, terms in enumerate(minimal):
        others = [
            (t[0][0], inv(t[0][1]), t) for k, t in enumerate(minimal) if k != idx
        ]
        rem = _reduce_sorted(list(terms), others, p, key, None)
        c = inv(rem[0][1])
        reduced.append([(m, k * c % p) for m, k in rem])
    reduced.sort(key=lambda t: key(t[0][0]), reverse=True)
    return reduced


# ---------------------------------------------------------------------------
# certification

@dataclass(frozen=True)
class GroebnerCertificate:
    """Division certificates for all S-pairs of a basis.

    When `ok`, every S(g_j, g_k) equals the recorded combination of basis
    elements, with each nonzero quotient satisfying lm(a * g_i) <= lm(S).
    Otherwise `failure` holds the first failing pair and its remainder.
    """

    basis: tuple[Polynomial, ...]
    order: MonomialOrder
    ok: bool
    entries: tuple[tuple[int, int, tuple[Polynomial, ...]], ...]
    failure: tuple[int, int, Polynomial] | None = None

    def check(self) -> bool:
        """Re-verify every recorded identity and leading-monomial bound."""
        if not self.ok:
            return False
        for j, k, quots in self.entries:
            s = s_polynomial(self.basis[j], self.basis[k], self.order)
            combo = self.basis[0].ring.zero()
            for a, g in zip(quots, self.basis):
                combo = combo + a * g
            if combo != s:
                return False
            if s.is_zero():
                if any(not a.is_zero() for a in quots):
                    return False
                continue
            s_lm_key = self.order.key(s.leading_monomial(self.order))
            for a, g in zip(quots, self.basis):
                if a.is_zero():
                    continue
                prod_lm = (a * g).leading_monomial(self.order)
                if self.order.key(prod_lm) > s_lm_key:
                    return False
        return True

    def to_json(self) -> str:
        payload: dict = {
            "order": self.order.describe(),
            "pass": self.ok,
            "basis": [str(g) for g in self.basis],
        }
        if self.ok:
            payload["pairs"] = [
                {
                    "j": j,
                    "k": k,
                    "quotients": [str(a) for a in quots],
                }
                for j, k, quots in self.entries
            ]
        else:
            j, k, rem = self.failure
            payload["failure"] = {"j": j, "k": k, "remainder": str(rem)}
        return json.dumps(payload, sort_keys=True)


def certify_groebner(
    basis: Sequence[Polynomial], order: MonomialOrder | None = None
) -> GroebnerCertificate:
    """Certify that `basis` is a Groebner basis by dividing every S-pair.

    Returns a full quotient table when all remainders vanish, or a certificate
    with `ok=False` carrying the first failing pair.  Pairs of monomials have
    zero S-polynomial and certify trivially; so does a single element.
    """
    basis = tuple(basis)
    if not basis:
        return GroebnerCertificate((), order or DegRevLex(), True, ())
    ring = basis[0].ring
    if order is None:
        order = ring.order
    entries = []
    for k in range(len(basis)):
        for j in range(k):
            s = s_polynomial(basis[j], basis[k], order)
            quots, rem = division(s, basis, order)
            if not rem.is_zero():
                return GroebnerCertificate(basis, order, False, tuple(entries), (j, k, rem))
            entries.append((j, k, tuple(quots)))
    return GroebnerCertificate(basis, order, True, tuple(entries))
