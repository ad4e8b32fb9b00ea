"""Endomorphism pairs of the plane: composition, tame decomposition, inverses.

An automorphism is stored as the image pair (fx, fy) of the two variables.
The composition convention is fixed once for the whole library:

    compose(a, b) has images given by b's polynomials evaluated at a's images,

so as maps of polynomials compose(a, b)(p) = a(b(p)), and the pair acts on a
polynomial by substitution of its images.

Decomposition peels elementary factors greedily: for image degrees k >= l the
top homogeneous form of fx must be a scalar multiple of the m-th power of the
top form of fy (m = k/l), which strips one shear; a swap reduces the k < l
case.  The procedure doubles as the automorphism test - any failure (constant
images, non-divisible degrees, non-proportional top forms, singular terminal
matrix) certifies that the pair is not a tame automorphism without
translations, and in two variables there are no other automorphisms of that
kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import NotAnAutomorphism
from .poly import XY, Poly, in_component, subst


@dataclass(frozen=True)
class Automorphism2:
    """An endomorphism of the plane as an image pair (unverified at
    construction; run :func:`decompose` to certify invertibility)."""

    fx: Poly
    fy: Poly

    def __post_init__(self):
        if self.fx.ring != XY or self.fy.ring != XY:
            raise ValueError("automorphism images must live in the x,y ring")

    @classmethod
    def identity(cls) -> "Automorphism2":
        return cls(Poly.variable(XY, "x"), Poly.variable(XY, "y"))

    @classmethod
    def from_strings(cls, fx, fy) -> "Automorphism2":  # pragma: no cover - helper
        from .exprio import parse_poly

        return cls(parse_poly(fx, XY), parse_poly(fy, XY))

    @property
    def images(self) -> list[Poly]:
        return [self.fx, self.fy]

    def apply_to(self, p: Poly) -> Poly:
        """Act on a polynomial by substituting the image pair."""
        return subst(p, self.images)

    def is_identity(self) -> bool:
        return self == Automorphism2.identity()

    def __str__(self):
        return f"({self.fx}, {self.fy})"


def compose(a: Automorphism2, b: Automorphism2) -> Automorphism2:
    """b's polynomials evaluated at a's images."""
    return Automorphism2(a.apply_to(b.fx), a.apply_to(b.fy))


def compose_all(factors) -> Automorphism2:
    out = Automorphism2.identity()
    for f in factors:
        out = compose(out, f if isinstance(f, Automorphism2) else f.as_automorphism())
    return out


# ---------------------------------------------------------------------------
# elementary factors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Linear:
    """The invertible linear map (a*x + b*y, c*x + d*y)."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.det == 0:
            raise NotAnAutomorphism("singular linear part")

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def as_automorphism(self) -> Automorphism2:
        x = Poly.variable(XY, "x")
        y = Poly.variable(XY, "y")
        return Automorphism2(self.a * x + self.b * y, self.c * x + self.d * y)

    def inverse(self) -> "Linear":
        det = self.det
        return Linear(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def __str__(self):
        return f"linear [[{self.a}, {self.b}], [{self.c}, {self.d}]]"


SWAP = Linear(0, 1, 1, 0)


@dataclass(frozen=True)
class ShearX:
    """The map (x - alpha*y^m, y)."""

    alpha: Fraction
    m: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.m < 1:
            raise ValueError("shear exponent must be at least 1")

    def as_automorphism(self) -> Automorphism2:
        x = Poly.variable(XY, "x")
        y = Poly.variable(XY, "y")
        return Automorphism2(x - self.alpha * y**self.m, y)

    def inverse(self) -> "ShearX":
        return ShearX(-self.alpha, self.m)

    def __str__(self):
        return f"shear_x alpha={self.alpha} m={self.m}"


@dataclass(frozen=True)
class ShearY:
    """The map (x, y - alpha*x^m)."""

    alpha: Fraction
    m: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.m < 1:
            raise ValueError("shear exponent must be at least 1")

    def as_automorphism(self) -> Automorphism2:
        x = Poly.variable(XY, "x")
        y = Poly.variable(XY, "y")
        return Automorphism2(x, y - self.alpha * x**self.m)

    def inverse(self) -> "ShearY":
        return ShearY(-self.alpha, self.m)

    def __str__(self):
        return f"shear_y alpha={self.alpha} m={self.m}"


ElementaryFactor = Union[Linear, ShearX, ShearY]


# ---------------------------------------------------------------------------
# decomposition, inversion, gradedness
# ---------------------------------------------------------------------------


def _as_linear(a: Automorphism2) -> Linear | None:
    """The matrix of a, when both images are homogeneous linear forms."""
    x = (1, 0)
    y = (0, 1)
    for image in (a.fx, a.fy):
        if any(e not in (x, y) for e in image.terms):
            return None
    return Linear(
        a.fx.coefficient(x), a.fx.coefficient(y),
        a.fy.coefficient(x), a.fy.coefficient(y),
    )


def _top_form(p: Poly) -> Poly:
    d = p.total_degree()
    return Poly(p.ring, {e: c for e, c in p.terms.items() if sum(e) == d})


def decompose(a: Automorphism2) -> list[ElementaryFactor]:
    """Elementary factors whose composition (in order) equals a.

    Raises :class:`NotAnAutomorphism` when the peeling invariants fail.  The
    identity map decomposes into the empty list.
    """
    current = a
    peeled: list[ElementaryFactor] = []
    while True:
        linear = _as_linear(current)
        if linear is not None:
            break
        f, g = current.fx, current.fy
        k, l = f.total_degree(), g.total_degree()
        if k <= 0 or l <= 0:
            raise NotAnAutomorphism(f"constant image in {current}")
        if k < l:
            # current = (g, f) composed with the swap
            peeled.append(SWAP)
            current = Automorphism2(g, f)
            continue
        if k % l:
            raise NotAnAutomorphism(
                f"image degrees {k} and {l} do not divide each other"
            )
        m = k // l
        top_f, top_g_m = _top_form(f), _top_form(g) ** m
        lead = top_g_m.leading_exponents()
        alpha = top_f.coefficient(lead) / top_g_m.leading_coefficient()
        if alpha == 0 or top_f != alpha * top_g_m:
            raise NotAnAutomorphism(
                f"top form of {f} is not proportional to the {m}-th power of {g}"
            )
        reduced = f - alpha * g**m
        if reduced.total_degree() >= k:
            raise NotAnAutomorphism(f"degree did not drop while reducing {current}")
        # current = (reduced, g) composed with (x + alpha*y^m, y)
        peeled.append(ShearX(-alpha, m))
        current = Automorphism2(reduced, g)
    factors: list[ElementaryFactor] = []
    if linear != Linear(1, 0, 0, 1):
        factors.append(linear)
    factors.extend(reversed(peeled))
    return factors


def invert(a: Automorphism2) -> Automorphism2:
    """Two-sided inverse, via factor-wise inverses in reverse order."""
    factors = decompose(a)
    return compose_all(f.inverse() for f in reversed(factors))


def is_n_graded_aut(a: Automorphism2, n: int) -> bool:
    """True iff both images lie in the residue-1 component of the mod-n
    grading (so the map preserves the grading)."""
    return in_component(a.fx, n, 1) and in_component(a.fy, n, 1)


def scalar_of(a: Automorphism2) -> Fraction | None:
    """epsilon when a == (epsilon*x, epsilon*y), else None."""
    x = Poly.variable(XY, "x")
    y = Poly.variable(XY, "y")
    eps = a.fx.coefficient((1, 0))
    if eps != 0 and a.fx == eps * x and a.fy == eps * y:
        return eps
    return None


def equal_mod_E(a: Automorphism2, b: Automorphism2, n: int) -> bool:
    """True iff a and b differ by a scalar map (eps*x, eps*y) with eps^n = 1.

    Over the rationals eps is 1, or -1 when n is even.
    """
    quotient = compose(invert(b), a)
    eps = scalar_of(quotient)
    return eps is not None and eps**n == 1
