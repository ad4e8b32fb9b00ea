"""Automorphisms of the subalgebra and their graded lifts to the plane.

A graded automorphism of the plane induces an automorphism of the subalgebra
by restriction; this module also computes the converse.  Given generator
images g_0, ..., g_n, the lift is found constructively:

1. Restrict y d/dx to the subalgebra; its pushforward T through the given map
   satisfies T(g_i) = (n-i) g_{i+1}, a linear system over the plane whose
   unique graded solution (found by Cramer elimination from the first and
   last equations and verified against all of them) is the extension of T.
2. Triangulating that extension yields a tame graded beta with
   conjugate(T, beta) = g(y) d/dx.
3. The twisted images f_i = beta_inverse(g_i) then satisfy
   f_i = p^(n-i) q^i u for coprime p, q and a constant u; extracting the
   rational n-th root of u normalizes to u = 1, after which p must be
   a*x + b(y) and q must be e*y.  The lift is beta o (a*x + b(y), y) o (x, e*y).

Every shape check failure surfaces as a domain error; when the only
obstruction is the missing rational n-th root, NeedsRootExtension reports the
constant and index, which is exactly the gap between the rationals and an
algebraically closed coefficient field.  A final exact comparison of the
induced images against the input is always performed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import VeroneseContext, member
from .automorphisms import (Automorphism2, compose, decompose, invert,
                            is_n_graded_aut)
from .derivations import Derivation2, is_n_graded_derivation
from .errors import (DivisionNotExact, NotADerivation, NotAnAutomorphism,
                     NotGraded, NotInAlgebra)
from .poly import XY, Poly, diff, exact_div, gcd, nth_root_rational
from .triangulation import triangulate


@dataclass(frozen=True)
class AutomorphismV:
    """An endomorphism of the subalgebra, as images of the n+1 generators.

    Construction checks membership only; whether the images define an
    automorphism is decided operationally by :func:`lift_automorphism`.
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


def induce_on_V(a: Automorphism2, ctx: VeroneseContext) -> AutomorphismV:
    """Restrict a verified graded automorphism to the subalgebra."""
    if not is_n_graded_aut(a, ctx.n):
        raise NotGraded(f"automorphism images are not homogeneous mod {ctx.n}")
    decompose(a)  # raises NotAnAutomorphism unless invertible
    return AutomorphismV(ctx, tuple(a.apply_to(g) for g in ctx.generators()))


def _check_relations(av: AutomorphismV) -> None:
    """Generator images must satisfy the quadratic relations exactly."""
    n = av.ctx.n
    g = av.images
    for i in range(1, n):
        for j in range(i, n):
            if g[i - 1] * g[j + 1] != g[i] * g[j]:
                raise NotADerivation(
                    f"images break the relation X{i - 1}*X{j + 1} = X{i}*X{j}"
                )


def _pushforward_of_slide(av: AutomorphismV) -> Derivation2:
    """The graded extension of the pushforward of y d/dx through av.

    Solves u dg/dx + v dg/dy = h on the generator images, where
    h_i = (n-i) g_{i+1} comes from y d/dx acting on the generators, and
    verifies every equation.
    """
    n = av.ctx.n
    g = av.images
    h = [(n - i) * g[i + 1] for i in range(n)] + [Poly.zero(XY)]
    gx = [diff(p, "x") for p in g]
    gy = [diff(p, "y") for p in g]
    jac = gx[0] * gy[n] - gy[0] * gx[n]
    if jac.is_zero:
        raise NotADerivation("generator images have a degenerate Jacobian pair")
    try:
        u = exact_div(h[0] * gy[n] - h[n] * gy[0], jac)
        v = exact_div(gx[0] * h[n] - gx[n] * h[0], jac)
    except DivisionNotExact as exc:
        raise NotADerivation(str(exc)) from exc
    for i in range(n + 1):
        if u * gx[i] + v * gy[i] != h[i]:
            raise NotADerivation(
                f"no derivation matches the pushforward on generator {i}"
            )
    lifted = Derivation2(u, v)
    if not is_n_graded_derivation(lifted, n):
        raise NotADerivation("pushforward derivation is not graded")
    return lifted


def lift_automorphism(av: AutomorphismV) -> Automorphism2:
    """The graded plane automorphism inducing ``av``, up to scalar maps.

    For even n the representative with positive leading coefficient of the
    second image is returned; for odd n the lift is unique.  The result is
    always re-induced and compared against the input exactly.
    """
    ctx = av.ctx
    n = ctx.n
    _check_relations(av)
    lifted = _pushforward_of_slide(av)
    normalization = triangulate(lifted, n)
    beta = normalization.conjugator_automorphism()
    beta_inv = normalization.conjugator_inverse()
    f = [beta_inv.apply_to(g) for g in av.images]
    if f[0].is_zero or f[1].is_zero:
        raise NotAnAutomorphism("a generator image vanishes")
    common = gcd(f[0], f[1])
    p = exact_div(f[0], common)
    q = exact_div(f[1], common)
    try:
        unit = exact_div(f[0], p**n)
    except DivisionNotExact as exc:
        raise NotAnAutomorphism(str(exc)) from exc
    if not unit.is_constant or unit.is_zero:
        raise NotAnAutomorphism("twisted images are not powers of a coprime pair")
    scale = nth_root_rational(unit.as_constant(), n)
    p = p.scale(scale)
    q = q.scale(scale)
    for i in range(n + 1):
        if p ** (n - i) * q**i != f[i]:
            raise NotAnAutomorphism(
                f"twisted generator image {i} is not p^(n-i) q^i"
            )
    # p must be a*x + b(y) with constant a != 0, q must be e*y
    if p.degree_in("x") != 1:
        raise NotAnAutomorphism("first coordinate is not linear in x")
    a_coeff = Fraction(0)
    b_terms = {}
    for (ex, ey), c in p.terms.items():
        if ex == 1 and ey == 0:
            a_coeff = c
        elif ex == 0:
            b_terms[(0, ey)] = c
        else:
            raise NotAnAutomorphism("first coordinate mixes x with y")
    if a_coeff == 0:
        raise NotAnAutomorphism("first coordinate has no x term")
    if list(q.terms.keys()) != [(0, 1)]:
        raise NotAnAutomorphism("second coordinate is not a scalar multiple of y")
    e_coeff = q.terms[(0, 1)]
    x = Poly.variable(XY, "x")
    y = Poly.variable(XY, "y")
    gamma = Automorphism2(a_coeff * x + Poly(XY, b_terms), y)
    delta = Automorphism2(x, e_coeff * y)
    result = compose(compose(beta, gamma), delta)
    if n % 2 == 0 and result.fy.leading_coefficient() < 0:
        result = Automorphism2(-result.fx, -result.fy)
    if not is_n_graded_aut(result, n):
        raise NotAnAutomorphism("lift is not graded")
    if induce_on_V(result, ctx).images != av.images:
        raise NotAnAutomorphism("lift does not induce the requested images")
    return result
