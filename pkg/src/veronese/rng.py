"""Deterministic, splittable sample generators for tests and the CLI.

Randomness comes from a counter-based construction: each draw hashes
(seed key, split path, counter), so a generator is reproducible from its seed
and independent children can be split off by name.  Only the sampled
distributions are part of the interface contract, not the bit stream:

* tame words have at most 6 elementary factors,
* shear exponents are 1 + s*n with 1 <= s <= 3 (so at most 1 + 3n),
* nonzero coefficients are drawn from {-9..9} minus {0}, and linear factors
  draw matrix entries from {-9..9} until the determinant is nonzero.

Samplers that compose factors resample (deterministically) when the composed
images grow past a term budget; this keeps downstream exact arithmetic at
desk scale without changing the contractual bounds above.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from typing import Sequence

from .automorphisms import (Automorphism2, ElementaryFactor, Linear, ShearX,
                            ShearY, compose)
from .derivations import Derivation2, conjugate_by_factors
from .poly import XY, Poly


class CounterRng:
    """Counter-mode generator over blake2b, splittable by path tags."""

    def __init__(self, seed: int | str, path: tuple[str, ...] = ()):
        self.seed = seed
        self.path = path
        self._key = hashlib.sha256(repr(seed).encode()).digest()[:32]
        self._counter = 0

    def child(self, tag: int | str) -> "CounterRng":
        return CounterRng(self.seed, self.path + (str(tag),))

    def _draw(self) -> int:
        payload = ("/".join(self.path) + f"#{self._counter}").encode()
        self._counter += 1
        digest = hashlib.blake2b(payload, key=self._key, digest_size=8).digest()
        return int.from_bytes(digest, "big")

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], inclusive."""
        if hi < lo:
            raise ValueError("empty range")
        span = hi - lo + 1
        # 64 fresh bits per draw; modulo bias is negligible for test sampling
        return lo + self._draw() % span

    def choice(self, seq: Sequence):
        return seq[self.randint(0, len(seq) - 1)]

    def coeff(self) -> Fraction:
        """Nonzero integer coefficient in {-9..9}."""
        value = self.randint(1, 9)
        return Fraction(value if self.randint(0, 1) else -value)


# ---------------------------------------------------------------------------
# factor and word samplers
# ---------------------------------------------------------------------------


def sample_linear(rng: CounterRng) -> Linear:
    while True:
        entries = [rng.randint(-9, 9) for _ in range(4)]
        if entries[0] * entries[3] - entries[1] * entries[2] != 0:
            return Linear(*entries)


def sample_shear(rng: CounterRng, n: int) -> ElementaryFactor:
    m = 1 + n * rng.randint(1, 3)
    alpha = rng.coeff()
    return ShearX(alpha, m) if rng.randint(0, 1) else ShearY(alpha, m)


def _within(a: Automorphism2, term_cap: int, degree_cap: int | None) -> bool:
    if len(a.fx.terms) + len(a.fy.terms) > term_cap:
        return False
    if degree_cap is not None and max(
        a.fx.total_degree(), a.fy.total_degree()
    ) > degree_cap:
        return False
    return True


def sample_tame_word(
    rng: CounterRng,
    n: int,
    max_factors: int = 6,
    term_cap: int = 120,
    degree_cap: int | None = 40,
) -> tuple[list[ElementaryFactor], Automorphism2]:
    """A graded tame word and its composition.

    Factors are appended one at a time; a factor that pushes the composition
    past the budget is redrawn a few times and then the word is cut short, so
    heavily capped calls still terminate quickly.
    """
    count = rng.randint(0, max_factors)
    factors: list[ElementaryFactor] = []
    out = Automorphism2.identity()
    for _ in range(count):
        for _ in range(12):
            f = sample_linear(rng) if rng.randint(0, 1) else sample_shear(rng, n)
            if degree_cap is not None and isinstance(f, (ShearX, ShearY)):
                base = out.fy if isinstance(f, ShearX) else out.fx
                # cheap bound on the composed degree; skip doomed candidates
                if f.m * max(base.total_degree(), 1) > degree_cap:
                    continue
            candidate = compose(out, f.as_automorphism())
            if _within(candidate, term_cap, degree_cap):
                factors.append(f)
                out = candidate
                break
        else:
            break
    return factors, out


# ---------------------------------------------------------------------------
# polynomial and derivation samplers
# ---------------------------------------------------------------------------


def sample_component_poly(
    rng: CounterRng,
    n: int,
    residue: int = 1,
    max_block: int = 2,
    max_terms: int = 3,
    allow_zero: bool = False,
) -> Poly:
    """A polynomial supported in one graded component."""
    while True:
        terms = {}
        for _ in range(rng.randint(0 if allow_zero else 1, max_terms)):
            degree = residue + n * rng.randint(0, max_block)
            a = rng.randint(0, degree)
            exps = (a, degree - a)
            terms[exps] = terms.get(exps, 0) + rng.coeff()
        p = Poly(XY, terms)
        if allow_zero or not p.is_zero:
            return p


def sample_graded_derivation(rng: CounterRng, n: int) -> Derivation2:
    """A derivation with both images in the residue-1 component."""
    fx = sample_component_poly(rng, n, allow_zero=True)
    fy = sample_component_poly(rng, n, allow_zero=True)
    if fx.is_zero and fy.is_zero:
        fx = sample_component_poly(rng, n)
    return Derivation2(fx, fy)


def sample_k_y_1(rng: CounterRng, n: int) -> Poly:
    """A nonzero element of the residue-1 part of K[y], degree <= 2n + 1."""
    while True:
        terms = {}
        for s in range(3):  # exponents 1, 1+n, 1+2n
            if rng.randint(0, 1):
                terms[(0, 1 + n * s)] = rng.coeff()
        p = Poly(XY, terms)
        if not p.is_zero:
            return p


def sample_lnd(
    rng: CounterRng,
    n: int,
    max_factors: int = 4,
    term_cap: int = 160,
    degree_cap: int | None = 14,
    result_degree_cap: int | None = None,
) -> tuple[Derivation2, Poly, Automorphism2]:
    """A locally nilpotent graded derivation built as a conjugate of
    f(y) d/dx; returns (derivation, f, conjugating word).

    ``degree_cap`` bounds the conjugating word; the derivation itself is kept
    below ``result_degree_cap`` (default three times the word cap).  Word and
    nilpotent-part degrees are bounded before the conjugate is computed, so
    rejection is cheap.
    """
    budget = result_degree_cap
    if budget is None and degree_cap is not None:
        budget = 3 * degree_cap
    for _ in range(64):
        f = sample_k_y_1(rng, n)
        factors, word = sample_tame_word(
            rng, n, max_factors=max_factors,
            term_cap=term_cap, degree_cap=degree_cap,
        )
        if budget is not None:
            deg_w = max(word.fx.total_degree(), word.fy.total_degree())
            if deg_w * (f.total_degree() + deg_w) > 3 * budget:
                continue
        d = conjugate_by_factors(Derivation2(f, Poly.zero(XY)), factors)
        if len(d.fx.terms) + len(d.fy.terms) > term_cap:
            continue
        if budget is not None and max(
            d.fx.total_degree(), d.fy.total_degree()
        ) > budget:
            continue
        return d, f, word
    raise RuntimeError("sampler failed to produce a derivation within budget")
