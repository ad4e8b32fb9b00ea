"""The degree-n Veronese subalgebra of the plane and its ambient quotient.

For n >= 2 the subalgebra of K[x, y] generated by x^n, x^(n-1)y, ..., y^n is
isomorphic to K[X0, ..., Xn] modulo the determinantal ideal generated by the
quadratic relations

    F(i, j) = X_{i-1} X_{j+1} - X_i X_j,     1 <= i <= j <= n-1.

These relations form a Groebner basis for the lex order X0 > X1 > ... > Xn,
with leading monomials X_{i-1} X_{j+1}.  The reduced monomials - products of
two adjacent variables, X_k^i X_{k+1}^j - form a linear basis of the quotient,
and substitution X_i -> x^(n-i) y^i maps them bijectively onto the bivariate
monomials of total degree divisible by n.

This module implements membership, the substitution map and its inverse on
members, normal forms modulo the relation ideal, and basis enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInAlgebra
from .poly import XY, Exponents, Poly, subst, x_ring


class VeroneseContext:
    """Fixed index n >= 2 with its two ambient rings."""

    __slots__ = ("n", "xy_ring", "big_ring")

    def __init__(self, n: int):
        n = int(n)
        if n < 2:
            raise ValueError("the subalgebra index must be at least 2")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "xy_ring", XY)
        object.__setattr__(self, "big_ring", x_ring(n))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("VeroneseContext is immutable")

    def __eq__(self, other):
        return isinstance(other, VeroneseContext) and self.n == other.n

    def __hash__(self):
        return hash(("VeroneseContext", self.n))

    def __repr__(self):
        return f"VeroneseContext(n={self.n})"

    def generators(self) -> list[Poly]:
        """The generator images x^(n-i) y^i for i = 0..n."""
        n = self.n
        return [Poly.monomial(XY, (n - i, i)) for i in range(n + 1)]

    def relation_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.n) for j in range(i, self.n)]

    def relations(self) -> list["Relation"]:
        return [Relation(self, i, j) for i, j in self.relation_pairs()]


@dataclass(frozen=True)
class Relation:
    """The quadratic relation X_{i-1} X_{j+1} - X_i X_j."""

    ctx: VeroneseContext
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i <= self.j <= self.ctx.n - 1:
            raise ValueError(f"relation indices ({self.i}, {self.j}) out of range")

    def as_poly(self) -> Poly:
        ring = self.ctx.big_ring
        width = len(ring)

        def mono(a: int, b: int) -> Exponents:
            e = [0] * width
            e[a] += 1
            e[b] += 1
            return tuple(e)

        return Poly(
            ring,
            {mono(self.i - 1, self.j + 1): Fraction(1), mono(self.i, self.j): Fraction(-1)},
        )

    def leading_exponents(self) -> Exponents:
        return self.as_poly().leading_exponents()


@dataclass(frozen=True)
class BasisMonomial:
    """A reduced monomial X_k^i X_{k+1}^j in canonical form.

    Pure powers are ambiguous between adjacent index families; the
    representation with the smallest k is canonical, so a pure power of X_m
    with m >= 1 is stored as (k, i, j) = (m-1, 0, e) and only pure powers of
    X0 use j = 0.
    """

    k: int
    i: int
    j: int

    def __post_init__(self):
        if self.k < 0 or self.i < 0 or self.j < 0:
            raise ValueError("basis monomial indices must be nonnegative")
        if self.i == 0 and self.j == 0 and self.k != 0:
            raise ValueError("the unit monomial is stored with k = 0")
        if self.j == 0 and self.i > 0 and self.k > 0:
            raise ValueError(
                f"pure power of X{self.k} must be stored at k = {self.k - 1}"
            )

    @classmethod
    def canonical(cls, k: int, i: int, j: int) -> "BasisMonomial":
        if i == 0 and j == 0:
            return cls(0, 0, 0)
        if j == 0 and k > 0:
            return cls(k - 1, 0, i)
        return cls(k, i, j)

    def degree(self) -> int:
        return self.i + self.j

    def exponents(self, ctx: VeroneseContext) -> Exponents:
        if self.k + (1 if self.j else 0) > ctx.n:
            raise ValueError(f"{self} does not fit in {ctx}")
        e = [0] * (ctx.n + 1)
        e[self.k] += self.i
        if self.j:
            e[self.k + 1] += self.j
        return tuple(e)

    def as_poly(self, ctx: VeroneseContext) -> Poly:
        return Poly.monomial(ctx.big_ring, self.exponents(ctx))

    def __str__(self):
        pieces = []
        if self.i:
            pieces.append(f"X{self.k}" + (f"^{self.i}" if self.i > 1 else ""))
        if self.j:
            pieces.append(f"X{self.k + 1}" + (f"^{self.j}" if self.j > 1 else ""))
        return "*".join(pieces) if pieces else "1"


# ---------------------------------------------------------------------------
# membership and the substitution isomorphism
# ---------------------------------------------------------------------------


def member(p: Poly, ctx: VeroneseContext) -> bool:
    """True iff every term of p has total degree divisible by n."""
    if len(p.ring) != 2:
        raise ValueError("membership is defined for bivariate polynomials")
    return all(sum(e) % ctx.n == 0 for e in p.terms)


def phi(p: Poly, ctx: VeroneseContext) -> Poly:
    """Substitute X_i -> x^(n-i) y^i.  The image always satisfies member."""
    if p.ring != ctx.big_ring:
        raise ValueError(f"expected ring {ctx.big_ring}, got {p.ring}")
    return subst(p, ctx.generators())


def _express_monomial(exps: Exponents, ctx: VeroneseContext) -> Exponents:
    """Exponents in X0..Xn of the unique reduced preimage of x^a y^b."""
    a, b = exps
    n = ctx.n
    m, rem = divmod(a + b, n)
    assert rem == 0
    out = [0] * (n + 1)
    if m == 0:
        return tuple(out)
    k = b // m
    j = b - k * m
    i = m - j
    out[k] += i
    if j:
        out[k + 1] += j
    return tuple(out)


def express(p: Poly, ctx: VeroneseContext) -> Poly:
    """Rewrite a member of the subalgebra in the generators X0..Xn.

    Works monomial by monomial: x^a y^b with a + b = n*m maps to
    X_k^i X_{k+1}^j where k = floor(b/m), j = b - k*m, i = m - j.  The result
    is supported on basis monomials and phi(express(p)) == p.
    """
    if len(p.ring) != 2:
        raise ValueError("express is defined for bivariate polynomials")
    bad = [e for e in p.terms if sum(e) % ctx.n != 0]
    if bad:
        worst = max(bad)
        raise NotInAlgebra(
            f"term of degree {sum(worst)} is not a member for n={ctx.n}"
        )
    out: dict[Exponents, Fraction] = {}
    for e, c in p.terms.items():
        big = _express_monomial(e, ctx)
        out[big] = out.get(big, Fraction(0)) + c
    return Poly(ctx.big_ring, out)


# ---------------------------------------------------------------------------
# normal forms modulo the relation ideal
# ---------------------------------------------------------------------------


def _spread_pairs(exps: Exponents) -> list[tuple[int, int]]:
    """Index pairs (a, b) with b - a >= 2 and both variables present: exactly
    the leading monomials of relations dividing this monomial."""
    support = [idx for idx, e in enumerate(exps) if e]
    return [(a, b) for a in support for b in support if b - a >= 2]


def _rewrite(exps: Exponents, pair: tuple[int, int]) -> Exponents:
    """Apply X_a X_b -> X_{a+1} X_{b-1} once."""
    a, b = pair
    e = list(exps)
    e[a] -= 1
    e[b] -= 1
    e[a + 1] += 1
    e[b - 1] += 1
    return tuple(e)


#: Rewrite strategies: given a reducible monomial, choose the relation
#: instance to apply.  Any choice yields the same normal form (tested).
STRATEGIES = {
    "outer": lambda pairs: (min(p[0] for p in pairs), max(p[1] for p in pairs)),
    "inner": lambda pairs: min(pairs),
}


def groebner_reduce(p: Poly, ctx: VeroneseContext, strategy: str = "outer") -> Poly:
    """Normal form of p modulo the relation ideal.

    Repeatedly rewrites the lex-greatest reducible monomial with the rule
    X_a X_b -> X_{a+1} X_{b-1} (b >= a + 2); each step strictly decreases the
    monomial in the lex order, so the loop terminates with a combination of
    basis monomials.  The substitution image is invariant throughout.
    """
    if p.ring != ctx.big_ring:
        raise ValueError(f"expected ring {ctx.big_ring}, got {p.ring}")
    choose = STRATEGIES[strategy]
    terms = dict(p.terms)
    while True:
        reducible = [(e, _spread_pairs(e)) for e in terms]
        reducible = [(e, pairs) for e, pairs in reducible if pairs]
        if not reducible:
            return Poly(ctx.big_ring, terms)
        exps, pairs = max(reducible)
        coeff = terms.pop(exps)
        target = _rewrite(exps, choose(pairs))
        nxt = terms.get(target, Fraction(0)) + coeff
        if nxt == 0:
            terms.pop(target, None)
        else:
            terms[target] = nxt


def is_normal_form(p: Poly, ctx: VeroneseContext) -> bool:
    """True iff p is supported on basis monomials (no reducible monomial)."""
    return all(not _spread_pairs(e) for e in p.terms)


def s_polynomial(r1: Relation, r2: Relation) -> Poly:
    """Overlap combination of two relations with respect to their leading
    monomials: S = (lcm/lm1) * F1 - (lcm/lm2) * F2."""
    p1, p2 = r1.as_poly(), r2.as_poly()
    lm1, lm2 = p1.leading_exponents(), p2.leading_exponents()
    lcm = tuple(max(u, v) for u, v in zip(lm1, lm2))
    m1 = Poly.monomial(p1.ring, tuple(u - v for u, v in zip(lcm, lm1)))
    m2 = Poly.monomial(p2.ring, tuple(u - v for u, v in zip(lcm, lm2)))
    return m1 * p1 - m2 * p2


# ---------------------------------------------------------------------------
# basis enumeration
# ---------------------------------------------------------------------------


def enum_basis(ctx: VeroneseContext, m: int) -> list[BasisMonomial]:
    """All basis monomials of degree m, ordered by the y-degree of their
    substitution image.  There are n*m + 1 of them for m >= 1."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if m == 0:
        return [BasisMonomial(0, 0, 0)]
    out = []
    for b in range(ctx.n * m + 1):
        k = b // m
        j = b - k * m
        i = m - j
        if k == ctx.n:
            k, i, j = ctx.n - 1, 0, m
        out.append(BasisMonomial.canonical(k, i, j))
    return out
