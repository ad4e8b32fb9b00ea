"""Canonical words for graded plane automorphisms.

The graded automorphism group is generated by the linear maps GL and the
graded triangular maps T (those of the form (a*x + f(y), b*y) with f in the
residue-1 part of K[y]); the two overlap in the Borel subgroup

    B = { (a*x + c*y, b*y) : a*b != 0 },

and the group is the free product of GL and T amalgamated over B.  Fixing one
transversal of the nontrivial B-cosets in each factor therefore gives every
element a unique alternating word.  The transversals used here:

* ``TRep(f)``: the maps (x + f(y), y) with the linear coefficient of f zero -
  each triangular map (a*x + c*y + h(y), b*y) splits uniquely as that
  representative followed by a B element (f = h/a);
* ``GLRep(mu)``: the maps (y, x + mu*y) - the Bruhat representatives of the
  big cell, with mu read off the lower row of the matrix.

With this choice the B parts split off on the trailing side of each factor,
so a word denotes

    factor_1 o factor_2 o ... o factor_r o head

under the library's composition convention, with all B parts accumulated in
the head.  The mirrored convention (head leading) would be equally valid; the
choice here is fixed by the Bruhat form of GLRep.  Word uniqueness is a
theorem of amalgamated products and is exercised by the tests rather than
assumed anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .automorphisms import (Automorphism2, compose, decompose,
                            is_n_graded_aut, scalar_of)
from .errors import NotAnAutomorphism, NotGraded, SchemaError
from .poly import XY, Poly


@dataclass(frozen=True)
class BElement:
    """The map (alpha*x + gamma*y, beta*y); the amalgamated subgroup."""

    alpha: Fraction
    gamma: Fraction
    beta: Fraction

    def __post_init__(self):
        for name in ("alpha", "gamma", "beta"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.alpha == 0 or self.beta == 0:
            raise ValueError("B elements need nonzero diagonal entries")

    @classmethod
    def identity(cls) -> "BElement":
        return cls(1, 0, 1)

    def is_identity(self) -> bool:
        return self.alpha == 1 and self.gamma == 0 and self.beta == 1

    def as_automorphism(self) -> Automorphism2:
        x = Poly.variable(XY, "x")
        y = Poly.variable(XY, "y")
        return Automorphism2(self.alpha * x + self.gamma * y, self.beta * y)

    def __str__(self):
        return f"({self.alpha}*x + {self.gamma}*y, {self.beta}*y)"


@dataclass(frozen=True)
class TRep:
    """Transversal element (x + f(y), y): f nonzero, no linear term."""

    f: Poly

    def __post_init__(self):
        if self.f.ring != XY:
            raise ValueError("TRep polynomial must live in the x,y ring")
        if self.f.is_zero:
            raise ValueError("TRep polynomial must be nonzero")
        if self.f.depends_on("x"):
            raise ValueError("TRep polynomial must involve y only")
        if self.f.coefficient((0, 1)) != 0:
            raise ValueError("TRep polynomial must have no linear term")

    def check_graded(self, n: int) -> None:
        if any(ey % n != 1 for (_, ey) in self.f.terms):
            raise ValueError(f"TRep exponents must be 1 mod {n}")

    def as_automorphism(self) -> Automorphism2:
        x = Poly.variable(XY, "x")
        return Automorphism2(x + self.f, Poly.variable(XY, "y"))

    def __str__(self):
        return f"t {self.f}"


@dataclass(frozen=True)
class GLRep:
    """Transversal element (y, x + mu*y) of the nontrivial Bruhat cell."""

    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "mu", Fraction(self.mu))

    def as_automorphism(self) -> Automorphism2:
        x = Poly.variable(XY, "x")
        y = Poly.variable(XY, "y")
        return Automorphism2(y, x + self.mu * y)

    def __str__(self):
        return f"gl {self.mu}"


Factor = Union[TRep, GLRep]


@dataclass(frozen=True)
class AmalgamWord:
    """head plus strictly alternating transversal factors."""

    head: BElement
    factors: tuple[Factor, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for prev, nxt in zip(self.factors, self.factors[1:]):
            if isinstance(prev, TRep) == isinstance(nxt, TRep):
                raise ValueError("word factors must alternate between T and GL")

    def __str__(self):
        inner = "; ".join(str(f) for f in self.factors)
        return f"[{inner}] head {self.head}"


def assemble(w: AmalgamWord) -> Automorphism2:
    """Compose the factors in order, then the head."""
    out = Automorphism2.identity()
    for factor in w.factors:
        out = compose(out, factor.as_automorphism())
    return compose(out, w.head.as_automorphism())


# ---------------------------------------------------------------------------
# normalization
# ---------------------------------------------------------------------------


def _triangular_parts(g: Automorphism2):
    """(alpha, gamma, beta, h) when g = (alpha*x + gamma*y + h(y), beta*y)."""
    fy_terms = list(g.fy.terms.items())
    if len(fy_terms) != 1 or fy_terms[0][0] != (0, 1):
        return None
    beta = fy_terms[0][1]
    alpha = Fraction(0)
    h_terms = {}
    gamma = Fraction(0)
    for (ex, ey), c in g.fx.terms.items():
        if ex == 1 and ey == 0:
            alpha = c
        elif ex == 0 and ey == 1:
            gamma = c
        elif ex == 0:
            h_terms[(0, ey)] = c
        else:
            return None
    if alpha == 0:
        return None
    return alpha, gamma, beta, Poly(XY, h_terms)


def _linear_parts(g: Automorphism2):
    """((P, Q), (R, S)) when g = (P*x + Q*y, R*x + S*y)."""
    for image in (g.fx, g.fy):
        if any(e not in ((1, 0), (0, 1)) for e in image.terms):
            return None
    return (
        (g.fx.coefficient((1, 0)), g.fx.coefficient((0, 1))),
        (g.fy.coefficient((1, 0)), g.fy.coefficient((0, 1))),
    )


def _absorb(stack: list, carry: BElement, factor: Automorphism2) -> BElement:
    """Multiply one more group element into the normalized word."""
    g = compose(carry.as_automorphism(), factor)
    while True:
        tri = _triangular_parts(g)
        if tri is not None and tri[3].is_zero:
            return BElement(tri[0], tri[1], tri[2])
        kind = "t" if tri is not None else "gl"
        if stack and stack[-1][0] == kind:
            _, prev = stack.pop()
            g = compose(prev.as_automorphism(), g)
            continue
        if tri is not None:
            alpha, gamma, beta, h = tri
            rep = TRep(h.scale(1 / alpha))
            stack.append(("t", rep))
            return BElement(alpha, gamma, beta)
        lin = _linear_parts(g)
        if lin is None:
            raise NotAnAutomorphism(f"element {g} is in neither amalgam factor")
        (pp, qq), (rr, ss) = lin
        if rr == 0:
            raise NotAnAutomorphism(f"element {g} slipped past the B test")
        mu = ss / rr
        stack.append(("gl", GLRep(mu)))
        return BElement(qq - pp * mu, pp, rr)


def word_from_elements(elements, n: int) -> AmalgamWord:
    """Normalize an explicit product of triangular and linear automorphisms.

    Processes left to right, merging adjacent same-factor elements, splitting
    each into its transversal representative and a B part, and accumulating
    the B parts into the head.  Any expression of the same group element
    yields the same word.
    """
    stack: list[tuple[str, Factor]] = []
    carry = BElement.identity()
    for element in elements:
        carry = _absorb(stack, carry, element)
    factors = tuple(rep for _, rep in stack)
    for rep in factors:
        if isinstance(rep, TRep):
            rep.check_graded(n)
    return AmalgamWord(carry, factors)


def normal_form(a: Automorphism2, n: int) -> AmalgamWord:
    """The canonical word of a graded automorphism.

    Decomposes into elementary factors and normalizes them;
    ``assemble`` is exactly inverse to this.
    """
    if not is_n_graded_aut(a, n):
        raise NotGraded(f"automorphism images are not homogeneous mod {n}")
    return word_from_elements(
        (factor.as_automorphism() for factor in decompose(a)), n
    )


def normal_form_mod_E(a: Automorphism2, n: int) -> AmalgamWord:
    """Canonical word modulo the scalar maps (eps*x, eps*y), eps^n = 1.

    Over the rationals only even n admits a nontrivial scalar (eps = -1); the
    head is then flipped so its y-scale is positive.  Two graded automorphisms
    get identical words here iff they agree modulo those scalars.
    """
    w = normal_form(a, n)
    if n % 2 == 0 and w.head.beta < 0:
        head = BElement(-w.head.alpha, -w.head.gamma, -w.head.beta)
        return AmalgamWord(head, w.factors)
    return w


def in_E(a: Automorphism2, n: int) -> bool:
    """True iff a is a scalar map (eps*x, eps*y) with eps^n = 1."""
    eps = scalar_of(a)
    return eps is not None and eps**n == 1


def order_mod_E(a: Automorphism2, n: int, bound: int = 64) -> int | None:
    """Smallest k <= bound with a^k a scalar map in E; None when there is
    none.  Testing helper; finite-order elements are not classified here."""
    power = a
    for k in range(1, bound + 1):
        if in_E(power, n):
            return k
        power = compose(power, a)
    return None


# ---------------------------------------------------------------------------
# structured documents
# ---------------------------------------------------------------------------


def _fraction_from(field: str, raw) -> Fraction:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise SchemaError(field, "expected an integer or a rational string")
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(field, str(exc)) from exc


def word_to_document(w: AmalgamWord) -> dict:
    factors = []
    for rep in w.factors:
        if isinstance(rep, TRep):
            factors.append({"t": str(rep.f)})
        else:
            factors.append({"gl": str(rep.mu)})
    return {
        "head": {
            "alpha": str(w.head.alpha),
            "gamma": str(w.head.gamma),
            "beta": str(w.head.beta),
        },
        "factors": factors,
    }


def word_from_document(doc: dict, n: int) -> AmalgamWord:
    from .exprio import parse_poly

    if not isinstance(doc, dict):
        raise SchemaError("$", "expected an object")
    if "head" not in doc:
        raise SchemaError("head")
    head_doc = doc["head"]
    if not isinstance(head_doc, dict):
        raise SchemaError("head", "expected an object")
    values = {}
    for name in ("alpha", "gamma", "beta"):
        if name not in head_doc:
            raise SchemaError(f"head.{name}")
        values[name] = _fraction_from(f"head.{name}", head_doc[name])
    try:
        head = BElement(**values)
    except ValueError as exc:
        raise SchemaError("head", str(exc)) from exc
    if "factors" not in doc:
        raise SchemaError("factors")
    if not isinstance(doc["factors"], list):
        raise SchemaError("factors", "expected a list")
    factors: list[Factor] = []
    for idx, entry in enumerate(doc["factors"]):
        label = f"factors[{idx}]"
        if not isinstance(entry, dict) or len(entry) != 1:
            raise SchemaError(label, "expected {'t': poly} or {'gl': mu}")
        if "t" in entry:
            if not isinstance(entry["t"], str):
                raise SchemaError(label, "expected a polynomial string")
            try:
                rep = TRep(parse_poly(entry["t"], XY))
                rep.check_graded(n)
            except ValueError as exc:
                raise SchemaError(label, str(exc)) from exc
            factors.append(rep)
        elif "gl" in entry:
            factors.append(GLRep(_fraction_from(label, entry["gl"])))
        else:
            raise SchemaError(label, "expected {'t': poly} or {'gl': mu}")
    try:
        return AmalgamWord(head, tuple(factors))
    except ValueError as exc:
        raise SchemaError("factors", str(exc)) from exc
