"""Derivations of the plane and of the degree-n subalgebra.

A derivation of K[x, y] is determined by its images on x and y and acts by
the Leibniz rule; it respects the mod-n grading exactly when both images lie
in the residue-1 component, and in that case it restricts to a derivation of
the subalgebra generated by x^n, ..., y^n.

The converse is the lifting operation: given images on the n+1 generators,
the unique graded extension has

    fx = images[0] / (n x^(n-1)),      fy = images[n] / (n y^(n-1)),

and the candidate is accepted only if it reproduces every generator image

    images[i] = (n-i) x^(n-i-1) y^i fx  +  i x^(n-i) y^(i-1) fy.

Those n+1 equations are precisely the statement that restricting the
candidate returns the input, so verification doubles as the well-definedness
check; generator images incompatible with the quadratic relations fail it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import VeroneseContext, member
from .automorphisms import Automorphism2, invert
from .errors import NotADerivation, NotGraded, NotInAlgebra, NotLocallyNilpotent
from .poly import XY, DivisionNotExact, Poly, diff, exact_div, in_component

#: Iteration bound used by exp_lnd when none is given.
DEFAULT_NILPOTENCY_CAP = 256


@dataclass(frozen=True)
class Derivation2:
    """The derivation fx * d/dx + fy * d/dy of the plane."""

    fx: Poly
    fy: Poly

    def __post_init__(self):
        if self.fx.ring != XY or self.fy.ring != XY:
            raise ValueError("derivation images must live in the x,y ring")

    @classmethod
    def zero(cls) -> "Derivation2":
        return cls(Poly.zero(XY), Poly.zero(XY))

    def __neg__(self) -> "Derivation2":
        return Derivation2(-self.fx, -self.fy)

    def is_zero(self) -> bool:
        return self.fx.is_zero and self.fy.is_zero

    def __str__(self):
        return f"({self.fx}, {self.fy})"


def apply(d: Derivation2, p: Poly) -> Poly:
    """fx * dp/dx + fy * dp/dy."""
    if p.ring != XY:
        raise ValueError("apply expects a bivariate polynomial")
    return d.fx * diff(p, "x") + d.fy * diff(p, "y")


def is_n_graded_derivation(d: Derivation2, n: int) -> bool:
    """True iff both images lie in the residue-1 graded component."""
    return in_component(d.fx, n, 1) and in_component(d.fy, n, 1)


@dataclass(frozen=True)
class DerivationV:
    """A derivation of the subalgebra, as images of the n+1 generators.

    Every image must be a member of the subalgebra; nothing else is assumed,
    so a value of this type may fail to extend to a derivation (lifting
    rejects those).
    """

    ctx: VeroneseContext
    images: tuple[Poly, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.ctx.n + 1:
            raise ValueError(
                f"expected {self.ctx.n + 1} generator images, got {len(self.images)}"
            )
        for idx, image in enumerate(self.images):
            if image.ring != XY:
                raise ValueError("generator images must live in the x,y ring")
            if not member(image, self.ctx):
                raise NotInAlgebra(
                    f"image {idx} has a term of degree not divisible by {self.ctx.n}"
                )

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.images) + ")"


def restrict_to_V(d: Derivation2, ctx: VeroneseContext) -> DerivationV:
    """Apply a graded derivation to each generator x^(n-i) y^i."""
    if not is_n_graded_derivation(d, ctx.n):
        raise NotGraded(f"derivation images are not homogeneous mod {ctx.n}")
    return DerivationV(ctx, tuple(apply(d, g) for g in ctx.generators()))


def lift_derivation(dv: DerivationV) -> Derivation2:
    """The unique graded derivation of the plane restricting to ``dv``.

    Raises :class:`NotADerivation` when the defining divisions are inexact or
    any generator equation fails, and :class:`NotGraded` if the recovered
    images are not homogeneous (impossible for member inputs, kept as a
    guard).
    """
    ctx = dv.ctx
    n = ctx.n
    x = Poly.variable(XY, "x")
    y = Poly.variable(XY, "y")

    def leading_quotient(image: Poly, divisor: Poly) -> Poly:
        if image.is_zero:
            return Poly.zero(XY)
        try:
            return exact_div(image, divisor)
        except DivisionNotExact as exc:
            raise NotADerivation(str(exc)) from exc

    fx = leading_quotient(dv.images[0], n * x ** (n - 1))
    fy = leading_quotient(dv.images[n], n * y ** (n - 1))
    if not (in_component(fx, n, 1) and in_component(fy, n, 1)):
        raise NotGraded("lifted images are not homogeneous mod n")
    for i in range(n + 1):
        expected = (n - i) * x ** max(n - i - 1, 0) * y**i * fx \
            + i * x ** (n - i) * y ** max(i - 1, 0) * fy
        if expected != dv.images[i]:
            raise NotADerivation(
                f"generator image {i} is incompatible with the first and last images"
            )
    return Derivation2(fx, fy)


def exp_lnd(d: Derivation2, cap: int = DEFAULT_NILPOTENCY_CAP) -> Automorphism2:
    """The exponential automorphism sum_p D^p / p! evaluated on x and y.

    Raises :class:`NotLocallyNilpotent` when the iterates on either variable
    fail to vanish within ``cap`` applications.
    """

    def orbit_sum(start: Poly) -> Poly:
        total = Poly.zero(XY)
        term = start
        p = 0
        while not term.is_zero:
            if p > cap:
                raise NotLocallyNilpotent(
                    f"iterates of {d} did not vanish within {cap} steps", cap=cap
                )
            total = total + term.scale(Fraction(1, math.factorial(p)))
            term = apply(d, term)
            p += 1
        return total

    return Automorphism2(orbit_sum(Poly.variable(XY, "x")),
                         orbit_sum(Poly.variable(XY, "y")))


def conjugate(d: Derivation2, a: Automorphism2) -> Derivation2:
    """The derivation u -> a_inv(D(a(u))).

    Conjugation is a right action for the library's composition convention:
    conjugate(d, compose(a, b)) == conjugate(conjugate(d, a), b).
    """
    a_inv = invert(a)
    return conjugate_with_inverse(d, a, a_inv)


def conjugate_with_inverse(d: Derivation2, a: Automorphism2,
                           a_inv: Automorphism2) -> Derivation2:
    """Same as :func:`conjugate` with a precomputed inverse."""
    return Derivation2(
        a_inv.apply_to(apply(d, a.fx)),
        a_inv.apply_to(apply(d, a.fy)),
    )


def conjugate_by_factors(d: Derivation2, factors) -> Derivation2:
    """Conjugate by a factored automorphism one elementary step at a time.

    Equal to conjugating by the composed word (conjugation is a right
    action), but avoids materializing large compositions and their inverses.
    """
    out = d
    for f in factors:
        out = conjugate_with_inverse(
            out, f.as_automorphism(), f.inverse().as_automorphism()
        )
    return out
