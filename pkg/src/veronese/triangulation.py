"""Deciding local nilpotency of graded derivations, constructively.

Each monomial summand c x^a1 y^a2 d/dv of a derivation shifts every monomial
by a fixed exponent vector, its *strength*: (a1, a2) minus the unit vector of
v.  The support of a derivation is its set of strengths.

A graded derivation is locally nilpotent exactly when one of three shapes
holds: it is f(y) d/dx, it is f(x) d/dy, or its support lies in the triangle
with vertices (s0, -1), (-1, -1), (-1, t0), where s0 and t0 are the largest
pure-power strengths on the two axes.  In the triangle case the top part for
the weight w = (n*l + 2, n*k + 2) (with s0 = 1 + n*k, t0 = 1 + n*l) factors as
g * (c d/dx + d x^r d/dy), and conjugating by the shear

    (x, y - d/((r+1)c) * x^(r+1))

strictly lowers s0 + t0, so iterating terminates in a normal form f(y) d/dx.
The emitted shears always have exponent r + 1 = 1 mod n, so the conjugator is
a graded tame automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .automorphisms import (SWAP, Automorphism2, ElementaryFactor, ShearY,
                            compose_all)
from .derivations import (Derivation2, conjugate_by_factors,
                          conjugate_with_inverse, is_n_graded_derivation)
from .errors import NotGraded, NotLocallyNilpotent
from .poly import Poly, Weight, exact_div, gcd

FY_DX = "fy-dx"
FX_DY = "fx-dy"
TRIANGLE = "triangle"
NOT_LND = "not-lnd"


class Strength(NamedTuple):
    s: int
    t: int


def support(d: Derivation2) -> frozenset[Strength]:
    """All strengths present in the derivation."""
    out = set()
    for (a1, a2) in d.fx.terms:
        out.add(Strength(a1 - 1, a2))
    for (a1, a2) in d.fy.terms:
        out.add(Strength(a1, a2 - 1))
    return frozenset(out)


@dataclass(frozen=True)
class Classification:
    kind: str
    s0: int | None = None
    t0: int | None = None


def classify(d: Derivation2, n: int) -> Classification:
    """Sort a graded derivation into one of the three nilpotent shapes.

    Returns NOT_LND when no shape matches; by the trichotomy for locally
    nilpotent derivations of the plane, such a derivation cannot be locally
    nilpotent.
    """
    if not is_n_graded_derivation(d, n):
        raise NotGraded(f"derivation images are not homogeneous mod {n}")
    if d.fy.is_zero and not d.fx.depends_on("x"):
        return Classification(FY_DX)
    if d.fx.is_zero and not d.fy.depends_on("y"):
        return Classification(FX_DY)
    xs = [a1 for (a1, a2) in d.fy.terms if a2 == 0]
    ys = [a2 for (a1, a2) in d.fx.terms if a1 == 0]
    if not xs or not ys:
        return Classification(NOT_LND)
    s0, t0 = max(xs), max(ys)
    for (s, t) in support(d):
        if s < -1 or t < -1:
            return Classification(NOT_LND)
        if (t0 + 1) * (s + 1) + (s0 + 1) * (t + 1) > (s0 + 1) * (t0 + 1):
            return Classification(NOT_LND)
    return Classification(TRIANGLE, s0, t0)


def _w_top_part(d: Derivation2, w: Weight) -> Derivation2:
    """The summand of maximal weighted strength value."""
    values = [w.value((a1 - 1, a2)) for (a1, a2) in d.fx.terms]
    values += [w.value((a1, a2 - 1)) for (a1, a2) in d.fy.terms]
    top = max(values)
    fx = Poly(d.fx.ring, {e: c for e, c in d.fx.terms.items()
                          if w.value((e[0] - 1, e[1])) == top})
    fy = Poly(d.fy.ring, {e: c for e, c in d.fy.terms.items()
                          if w.value((e[0], e[1] - 1)) == top})
    return Derivation2(fx, fy)


@dataclass(frozen=True)
class TriangulationResult:
    """A tame graded conjugator bringing the derivation to f(y) d/dx.

    ``conjugate(input, conjugator_automorphism()) == normal_fy d/dx`` holds
    exactly, every shear exponent is 1 mod n, and normal_fy lies in the
    residue-1 part of K[y].
    """

    conjugator: tuple[ElementaryFactor, ...]
    normal_fy: Poly

    def conjugator_automorphism(self) -> Automorphism2:
        return compose_all(self.conjugator)

    def conjugator_inverse(self) -> Automorphism2:
        return compose_all(f.inverse() for f in reversed(self.conjugator))


_SWAP_AUTO = SWAP.as_automorphism()


def triangulate(d: Derivation2, n: int) -> TriangulationResult:
    """Decide local nilpotency and normalize to f(y) d/dx.

    Raises :class:`NotLocallyNilpotent` when the classification fails, when a
    reduced top part is not of the required binomial shape, or when the s0+t0
    measure stops decreasing (which would indicate an internal error).
    """
    if not is_n_graded_derivation(d, n):
        raise NotGraded(f"derivation images are not homogeneous mod {n}")
    factors: list[ElementaryFactor] = []
    current = d
    last_shear_measure: int | None = None
    for _ in range(10_000):
        shape = classify(current, n)
        if shape.kind == FY_DX:
            return TriangulationResult(tuple(factors), current.fx)
        if shape.kind == FX_DY:
            factors.append(SWAP)
            current = conjugate_with_inverse(current, _SWAP_AUTO, _SWAP_AUTO)
            return TriangulationResult(tuple(factors), current.fx)
        if shape.kind == NOT_LND:
            raise NotLocallyNilpotent(
                f"support {sorted(support(current))} fits no nilpotent shape"
            )
        s0, t0 = shape.s0, shape.t0
        measure = s0 + t0
        if last_shear_measure is not None and measure >= last_shear_measure:
            raise NotLocallyNilpotent(
                "internal error: the s0+t0 measure failed to decrease"
            )
        k, k_rem = divmod(s0 - 1, n)
        l, l_rem = divmod(t0 - 1, n)
        if k_rem or l_rem:
            raise NotGraded("axis strengths are not congruent to 1 mod n")
        top = _w_top_part(current, Weight(n * l + 2, n * k + 2))
        g = gcd(top.fx, top.fy)
        a = exact_div(top.fx, g)
        b = exact_div(top.fy, g)
        if a.constant_term == 0 and b.constant_term != 0:
            # mirror case: move the constant into the x image and retry
            factors.append(SWAP)
            current = conjugate_with_inverse(current, _SWAP_AUTO, _SWAP_AUTO)
            continue
        if a.constant_term == 0:
            raise NotLocallyNilpotent(
                "reduced top part has no constant summand; no slice exists"
            )
        if not a.is_constant or len(b.terms) != 1:
            raise NotLocallyNilpotent(
                f"reduced top part ({a}, {b}) is not of the binomial shape"
            )
        ((r, yexp),) = b.terms.keys()
        if yexp != 0 or r % n != 0:
            raise NotLocallyNilpotent(
                f"reduced top part ({a}, {b}) is not of the binomial shape"
            )
        c_const = a.constant_term
        d_const = b.terms[(r, 0)]
        shear = ShearY(d_const / ((r + 1) * c_const), r + 1)
        factors.append(shear)
        current = conjugate_with_inverse(
            current, shear.as_automorphism(), shear.inverse().as_automorphism()
        )
        last_shear_measure = measure
    raise NotLocallyNilpotent("internal error: triangulation failed to settle")


def is_locally_nilpotent(d: Derivation2, n: int) -> bool:
    """Complete decision procedure for graded derivations."""
    try:
        triangulate(d, n)
        return True
    except NotLocallyNilpotent:
        return False
