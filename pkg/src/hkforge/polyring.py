"""Exact multivariate polynomial arithmetic over a prime field F_p.

Monomials are exponent tuples, one slot per ring variable.  A polynomial is an
immutable list of (monomial, coefficient) terms kept strictly descending under
the ring's monomial order, with coefficients fully reduced into [1, p).  All
operations are pure; values are safe to share freely.

The heart of the module is the division algorithm (`division` /
`normal_form`): divide by the first usable divisor in list order, always
rewriting the largest reducible term, so remainders and quotient certificates
are reproducible bit for bit.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .errors import DimensionError, RingMismatch, ZeroPolynomial

Monomial = tuple[int, ...]
Term = tuple[Monomial, int]

LT, EQ, GT = -1, 0, 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The coefficient domain Z/p for a prime p; elements are ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        self.p = p

    def __call__(self, a: int) -> int:
        return a % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


# ---------------------------------------------------------------------------
# monomials

def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b as a monomial, or None when b does not divide a."""
    q = []
    for x, y in zip(a, b):
        if x < y:
            return None
        q.append(x - y)
    return tuple(q)


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_divides(b: Monomial, a: Monomial) -> bool:
    return all(x >= y for x, y in zip(a, b))


def monomial_degree(a: Monomial) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# monomial orders

class MonomialOrder:
    """Total multiplicative order on monomials with 1 minimal.

    Subclasses provide `key`, mapping a monomial to a tuple that sorts the way
    the order compares.  `priority` optionally permutes variables before the
    key is formed; the default reads the ring's declared variable order as the
    priority (first variable largest for lex).
    """

    kind = "abstract"

    def __init__(self, priority: tuple[int, ...] | None = None):
        self.priority = priority

    def _permute(self, mon: Monomial) -> Monomial:
        if self.priority is None:
            return mon
        return tuple(mon[i] for i in self.priority)

    def key(self, mon: Monomial):
        raise NotImplementedError

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(b):
            raise DimensionError(f"exponent vectors of length {len(a)} vs {len(b)}")
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return LT
        if ka > kb:
            return GT
        return EQ

    def _ident(self) -> tuple:
        return (self.kind, self.priority)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and other._ident() == self._ident()

    def __hash__(self) -> int:
        return hash(self._ident())

    def __repr__(self) -> str:
        return f"<order {self.describe()}>"

    def describe(self) -> str:
        return self.kind


class Lex(MonomialOrder):
    kind = "lex"

    def key(self, mon: Monomial):
        return self._permute(mon)


class DegRevLex(MonomialOrder):
    kind = "degrevlex"

    def key(self, mon: Monomial):
        m = self._permute(mon)
        return (sum(m), tuple(-e for e in reversed(m)))


class Block(MonomialOrder):
    """Elimination order: the first `elim` variables dominate (compared lex),
    ties broken by `inner` on the remaining variables."""

    kind = "block"

    def __init__(self, elim: int, inner: MonomialOrder):
        super().__init__(None)
        if elim < 1:
            raise ValueError("block order needs at least one elimination variable")
        self.elim = elim
        self.inner = inner

    def key(self, mon: Monomial):
        return (mon[: self.elim], self.inner.key(mon[self.elim :]))

    def _ident(self) -> tuple:
        return (self.kind, self.elim, self.inner._ident())

    def describe(self) -> str:
        return f"block({self.elim};{self.inner.describe()})"


def compare_monomials(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """Three-way comparison under `order`: -1, 0, or 1."""
    return order.compare(a, b)


# ---------------------------------------------------------------------------
# rings and polynomials

class PolyRing:
    """F_p[x_1, ..., x_n] with a fixed active monomial order."""

    __slots__ = ("field", "variables", "order", "_var_index")

    def __init__(self, p: int, variables: Sequence[str], order: MonomialOrder | None = None):
        self.field = PrimeField(p)
        vars_ = tuple(variables)
        if len(set(vars_)) != len(vars_) or not vars_:
            raise ValueError(f"variables must be distinct and nonempty, got {vars_}")
        self.variables = vars_
        self.order = order if order is not None else DegRevLex()
        self._var_index = {v: i for i, v in enumerate(vars_)}

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def compatible(self, other: "PolyRing") -> bool:
        return self.p == other.p and self.variables == other.variables

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        if order == self.order:
            return self
        return PolyRing(self.p, self.variables, order)

    # -- construction -------------------------------------------------------

    def polynomial(self, coeffs: Mapping[Monomial, int] | Iterable[Term]) -> "Polynomial":
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[Monomial, int] = {}
        n = self.nvars
        for mon, c in items:
            if len(mon) != n:
                raise DimensionError(f"monomial {mon} has {len(mon)} slots, ring has {n}")
            if any(e < 0 for e in mon):
                raise ValueError(f"negative exponent in {mon}")
            acc[mon] = (acc.get(mon, 0) + c) % self.p
        terms = tuple(
            (m, c)
            for m, c in sorted(acc.items(), key=lambda t: self.order.key(t[0]), reverse=True)
            if c != 0
        )
        return Polynomial(self, terms)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        c %= self.p
        if c == 0:
            return self.zero()
        return Polynomial(self, (((0,) * self.nvars, c),))

    def gen(self, name: str) -> "Polynomial":
        i = self._var_index[name]
        mon = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((mon, 1),))

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(v) for v in self.variables)

    def monomial(self, *exponents: int) -> "Polynomial":
        if len(exponents) != self.nvars:
            raise DimensionError(f"expected {self.nvars} exponents, got {len(exponents)}")
        return Polynomial(self, ((tuple(exponents), 1),))

    def parse(self, text: str, names: Mapping[str, "Polynomial"] | None = None) -> "Polynomial":
        """Parse `3*s^2*x*y^4 - x + 7`-style expressions; see parse_polynomial."""
        return parse_polynomial(self, text, names)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyRing)
            and other.p == self.p
            and other.variables == self.variables
            and other.order == self.order
        )

    def __hash__(self) -> int:
        return hash((self.p, self.variables, self.order))

    def __repr__(self) -> str:
        return f"PolyRing(p={self.p}, vars={','.join(self.variables)}, order={self.order.describe()})"


class Polynomial:
    """Immutable element of a PolyRing.

    `terms` is a tuple of (monomial, coefficient) pairs, strictly descending
    under the ring's order, with no zero coefficients.  Equality and hashing
    are mathematical: they ignore the order the terms happen to be sorted by.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: tuple[Term, ...]):
        self.ring = ring
        self.terms = terms
        self._hash: int | None = None

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, mon: Monomial) -> int:
        for m, c in self.terms:
            if m == mon:
                return c
        return 0

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m, _ in self.terms)

    def leading_term(self, order: MonomialOrder | None = None) -> tuple[int, Monomial]:
        """(coefficient, monomial) of the maximal term; ZeroPolynomial on 0."""
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        if order is None or order == self.ring.order:
            m, c = self.terms[0]
        else:
            m, c = max(self.terms, key=lambda t: order.key(t[0]))
        return c, m

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        return self.leading_term(order)[1]

    def leading_coefficient(self, order: MonomialOrder | None = None) -> int:
        return self.leading_term(order)[0]

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        c = self.terms[0][1]
        if c == 1:
            return self
        return self.scale(self.ring.field.inv(c))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if not self.ring.compatible(other.ring):
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return None

    def __add__(self, other) -> "Polynomial":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        acc = dict(self.terms)
        p = self.ring.p
        for m, c in g.terms:
            acc[m] = (acc.get(m, 0) + c) % p
        return self.ring.polynomial(acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.ring.p
        return Polynomial(self.ring, tuple((m, p - c) for m, c in self.terms))

    def __sub__(self, other) -> "Polynomial":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other) -> "Polynomial":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g + (-self)

    def __mul__(self, other) -> "Polynomial":
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        if isinstance(other, int):
            return self.scale(other)
        acc: dict[Monomial, int] = {}
        p = self.ring.p
        for m1, c1 in self.terms:
            for m2, c2 in g.terms:
                m = monomial_mul(m1, m2)
                acc[m] = (acc.get(m, 0) + c1 * c2) % p
        return self.ring.polynomial(acc)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Polynomial":
        c %= self.ring.p
        if c == 0:
            return self.ring.zero()
        if c == 1:
            return self
        p = self.ring.p
        return Polynomial(self.ring, tuple((m, (k * c) % p) for m, k in self.terms))

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def mul_term(self, mon: Monomial, c: int) -> "Polynomial":
        """Multiply by the single term c * x^mon (order of terms is preserved)."""
        c %= self.ring.p
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial(
            self.ring, tuple((monomial_mul(m, mon), (k * c) % p) for m, k in self.terms)
        )

    def frobenius(self, e: int) -> "Polynomial":
        """The p^e-th power: term-wise exponent scaling, coefficients fixed.

        Valid over F_p because c^(p^e) = c and (u+v)^(p^e) = u^(p^e) + v^(p^e).
        """
        if e < 0:
            raise ValueError("frobenius exponent must be non-negative")
        if e == 0:
            return self
        q = self.ring.p**e
        return Polynomial(
            self.ring, tuple((tuple(q * a for a in m), c) for m, c in self.terms)
        )

    def resorted(self, ring: PolyRing) -> "Polynomial":
        """The same polynomial, re-normalized into a compatible ring."""
        if ring == self.ring:
            return self
        if not self.ring.compatible(ring):
            raise RingMismatch(f"{self.ring!r} vs {ring!r}")
        return ring.polynomial(dict(self.terms))

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.ring.p == other.ring.p
            and self.ring.variables == other.ring.variables
            and dict(self.terms) == dict(other.terms)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.ring.p, self.ring.variables, frozenset(self.terms))
            )
        return self._hash

    def __repr__(self) -> str:
        return f"<{self} over F_{self.ring.p}>"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mon, c in self.terms:
            factors = []
            if c != 1 or not any(mon):
                factors.append(str(c))
            for name, e in zip(self.ring.variables, mon):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)


def frobenius_power(f: Polynomial, e: int) -> Polynomial:
    return f.frobenius(e)


def leading_term(f: Polynomial, order: MonomialOrder | None = None) -> tuple[int, Monomial]:
    return f.leading_term(order)


# ---------------------------------------------------------------------------
# division

def _sorted_terms(f: Polynomial, key: Callable) -> list[Term]:
    return sorted(f.terms, key=lambda t: key(t[0]), reverse=True)


def _merge_sub(h: list[Term], start: int, g: list[Term], shift: Monomial, c: int, p: int, key) -> list[Term]:
    """h[start:] minus c * x^shift * g, both inputs descending; result descending.

    The leading terms cancel by construction in the division loop, but the
    merge does not rely on that.
    """
    out: list[Term] = []
    i, j = start, 0
    nh, ng = len(h), len(g)
    while i < nh and j < ng:
        mh, ch = h[i]
        mg = monomial_mul(g[j][0], shift)
        kh, kg = key(mh), key(mg)
        if kh > kg:
            out.append(h[i])
            i += 1
        elif kh < kg:
            out.append((mg, -c * g[j][1] % p))
            j += 1
        else:
            cc = (ch - c * g[j][1]) % p
            if cc:
                out.append((mh, cc))
            i += 1
            j += 1
    out.extend(h[i:])
    for jj in range(j, ng):
        out.append((monomial_mul(g[jj][0], shift), -c * g[jj][1] % p))
    return out


def _reduce_sorted(
    h: list[Term],
    ginfo: Sequence[tuple[Monomial, int, list[Term]]],
    p: int,
    key: Callable,
    quotients: list[dict[Monomial, int]] | None,
) -> list[Term]:
    """Core division loop on descending term lists.

    ginfo holds (leading monomial, inverse leading coefficient, sorted terms)
    per divisor.  Rewrites the largest reducible term against the first listed
    divisor whose lead divides it; irreducible terms accumulate into the
    remainder, which is returned (descending).
    """
    remainder: list[Term] = []
    start = 0
    while start < len(h):
        mon, coeff = h[start]
        for gi, (glm, glcinv, gterms) in enumerate(ginfo):
            t = monomial_div(mon, glm)
            if t is not None:
                c = coeff * glcinv % p
                if quotients is not None:
                    q = quotients[gi]
                    q[t] = (q.get(t, 0) + c) % p
                h = _merge_sub(h, start, gterms, t, c, p, key)
                start = 0
                break
        else:
            remainder.append((mon, coeff))
            start += 1
    return remainder


def divisor_table(
    divisors: Sequence[Polynomial], key: Callable, inv: Callable
) -> list[tuple[Monomial, int, list[Term]]]:
    """Precompute (lm, lc^-1, sorted terms) per divisor for repeated division."""
    table = []
    for g in divisors:
        if g.is_zero():
            raise ZeroPolynomial("cannot divide by the zero polynomial")
        terms = _sorted_terms(g, key)
        table.append((terms[0][0], inv(terms[0][1]), terms))
    return table


def division(
    f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder | None = None
) -> tuple[list[Polynomial], Polynomial]:
    """Divide f by the list of divisors; return (quotients, remainder).

    Guarantees: f == sum(q_i * g_i) + r exactly; no term of r is divisible by
    any leading monomial of the divisors; for every nonzero quotient term t,
    lm(t * g_i) <= lm(f).  Ties go to the first divisor in list order, and the
    largest reducible term is always rewritten first, so the output is a
    deterministic function of the inputs.
    """
    ring = f.ring
    if order is None:
        order = ring.order
    for g in divisors:
        f._check(g)
    key = order.key
    ginfo = divisor_table(divisors, key, ring.field.inv)
    quotients: list[dict[Monomial, int]] = [{} for _ in divisors]
    remainder = _reduce_sorted(_sorted_terms(f, key), ginfo, ring.p, key, quotients)
    return (
        [ring.polynomial(q) for q in quotients],
        ring.polynomial(remainder),
    )


def normal_form(
    f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder | None = None
) -> Polynomial:
    """Remainder of f on division by `divisors` (quotients discarded)."""
    if not divisors:
        return f
    return division(f, divisors, order)[1]


# ---------------------------------------------------------------------------
# text syntax

_TOKEN_CHARS = {"+", "-", "*", "^", "(", ")", ","}


def tokenize_expression(text: str):
    """Yield (kind, value, position) triples; kind in {int, name, op, end}."""
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield ("int", text[i:j], i)
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            yield ("name", text[i:j], i)
            i = j
        elif ch in _TOKEN_CHARS:
            yield ("op", ch, i)
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} at position {i}")
    yield ("end", "", n)


class _ExprParser:
    """Recursive descent for +, -, *, ^, parentheses over ring variables."""

    def __init__(self, ring: PolyRing, tokens, names: Mapping[str, Polynomial] | None):
        self.ring = ring
        self.tokens = list(tokens)
        self.pos = 0
        self.names = names or {}

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, value, at = self.advance()
        if kind != "op" or value != op:
            raise ValueError(f"expected {op!r} at position {at}, got {value!r}")

    def parse_expr(self) -> Polynomial:
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value in {"+", "-"}:
            self.advance()
            negate = value == "-"
        result = self.parse_term()
        if negate:
            result = -result
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in {"+", "-"}:
                self.advance()
                rhs = self.parse_term()
                result = result - rhs if value == "-" else result + rhs
            else:
                return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self) -> Polynomial:
        base = self.parse_base()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, at = self.advance()
            if kind != "int":
                raise ValueError(f"expected integer exponent at position {at}")
            return base ** int(value)
        return base

    def parse_base(self) -> Polynomial:
        kind, value, at = self.advance()
        if kind == "int":
            return self.ring.constant(int(value))
        if kind == "name":
            if value in self.ring._var_index:
                return self.ring.gen(value)
            if value in self.names:
                return self.names[value].resorted(self.ring)
            raise ValueError(f"unknown name {value!r} at position {at}")
        if kind == "op" and value == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if kind == "op" and value == "-":
            return -self.parse_factor()
        raise ValueError(f"unexpected token {value!r} at position {at}")


def parse_polynomial(
    ring: PolyRing, text: str, names: Mapping[str, Polynomial] | None = None
) -> Polynomial:
    """Parse an expression like `3*s^2*x*y^4 + x - 7` into `ring`.

    `names` supplies bindings for non-variable identifiers (used by the CLI to
    resolve previously declared polynomials).
    """
    parser = _ExprParser(ring, tokenize_expression(text), names)
    result = parser.parse_expr()
    kind, value, at = parser.peek()
    if kind != "end":
        raise ValueError(f"trailing input {value!r} at position {at}")
    return result
