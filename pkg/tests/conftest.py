"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from veronese import XY, Poly, parse_poly, x_ring

settings.register_profile(
    "suite",
    max_examples=40,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")


def coefficients():
    return st.fractions(min_value=-6, max_value=6, max_denominator=4).filter(
        lambda f: f != 0
    )


@st.composite
def polys(draw, ring=XY, max_terms=4, max_exp=4, allow_zero=True):
    width = len(ring)
    n_terms = draw(st.integers(0 if allow_zero else 1, max_terms))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(
            draw(st.integers(0, max_exp)) for _ in range(width)
        )
        terms[exps] = draw(coefficients())
    p = Poly(ring, terms)
    if not allow_zero and p.is_zero:
        p = p + Poly.const(ring, 1)
    return p


def xy_polys(**kw):
    return polys(ring=XY, **kw)


def big_polys(n, **kw):
    return polys(ring=x_ring(n), **kw)


def P(text: str) -> Poly:
    """Parse over the bivariate ring; shorthand for tests."""
    return parse_poly(text, XY)


def PX(text: str, n: int) -> Poly:
    return parse_poly(text, x_ring(n))


@pytest.fixture
def p():
    return P
