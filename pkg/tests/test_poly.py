"""Arithmetic core: ring laws, divisions, gcd, gradings, roots."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from veronese import (XY, DivisionNotExact, NeedsRootExtension, Poly, Weight,
                      diff, exact_div, gcd, graded_component,
                      graded_components, in_component, nth_root_rational,
                      subst, w_parts, x_ring)

from conftest import P, PX, coefficients, polys, xy_polys

X = Poly.variable(XY, "x")
Y = Poly.variable(XY, "y")


class TestRingOps:
    def test_difference_of_squares(self):
        assert (X + Y) * (X - Y) == P("x^2 - y^2")

    def test_zero_absorbs(self):
        assert P("3*x + y^2") * Poly.zero(XY) == Poly.zero(XY)

    def test_binomial_square(self):
        assert (X + Y) ** 2 == P("x^2 + 2*x*y + y^2")

    def test_ring_mismatch_rejected(self):
        with pytest.raises(ValueError, match="ring mismatch"):
            X + Poly.variable(x_ring(2), "X0")

    @given(xy_polys(), xy_polys(), xy_polys())
    def test_ring_laws(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @given(xy_polys())
    def test_sub_inverse(self, a):
        assert a - a == Poly.zero(XY)


class TestExactDiv:
    def test_monomial_factor(self):
        assert exact_div(P("x^2*y + x*y^2"), P("x*y")) == P("x + y")

    def test_scalar_cancel(self):
        q = exact_div(P("2*x*y"), P("2*x"))
        assert q == P("y")
        assert P("2*x") * q == P("2*x*y")  # oracle: multiply back

    def test_remainder_detected(self):
        with pytest.raises(DivisionNotExact):
            exact_div(P("x^2 + 1"), P("x"))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(X, Poly.zero(XY))

    @given(xy_polys(max_terms=3, max_exp=3), xy_polys(max_terms=3, max_exp=3, allow_zero=False))
    def test_multiply_then_divide(self, a, b):
        assert exact_div(a * b, b) == a


def _sympy_gcd(a: Poly, b: Poly) -> Poly:
    """Independent oracle: gcd through sympy, renormalized to monic-lex."""
    sx, sy = sympy.symbols("x y")

    def to_sympy(p):
        return sympy.Add(*[
            sympy.Rational(c) * sx**e[0] * sy**e[1] for e, c in p.terms.items()
        ])

    g = sympy.gcd(sympy.Poly(to_sympy(a), sx, sy, domain="QQ"),
                  sympy.Poly(to_sympy(b), sx, sy, domain="QQ"))
    terms = {}
    for exps, coeff in g.terms():
        terms[tuple(int(e) for e in exps)] = Fraction(int(coeff.p), int(coeff.q))
    result = Poly(XY, terms)
    return result.scale(1 / result.leading_coefficient())


class TestGcd:
    def test_shared_cubic(self):
        g = gcd(P("y - x^3"), P("3*x^2*y - 3*x^5"))
        assert g == P("x^3 - y")  # monic in the lex-leading term
        assert exact_div(P("y - x^3"), g) == P("-1")
        assert exact_div(P("3*x^2*y - 3*x^5"), g) == P("-3*x^2")

    def test_gcd_with_zero(self):
        assert gcd(P("2*y - 2*x^3"), Poly.zero(XY)) == P("x^3 - y")

    def test_coprime_variables(self):
        assert gcd(X, Y) == Poly.const(XY, 1)

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            gcd(Poly.zero(XY), Poly.zero(XY))

    @given(xy_polys(max_terms=3, max_exp=3), xy_polys(max_terms=3, max_exp=3))
    def test_divides_and_coprime_cofactors(self, a, b):
        if a.is_zero and b.is_zero:
            return
        g = gcd(a, b)
        for p in (a, b):
            if not p.is_zero:
                exact_div(p, g)
        if not (a.is_zero or b.is_zero):
            ca, cb = exact_div(a, g), exact_div(b, g)
            assert gcd(ca, cb) == Poly.const(XY, 1)

    @settings(max_examples=25)
    @given(xy_polys(max_terms=3, max_exp=3, allow_zero=False),
           xy_polys(max_terms=3, max_exp=3, allow_zero=False),
           xy_polys(max_terms=2, max_exp=2, allow_zero=False))
    def test_matches_sympy(self, a, b, common):
        a, b = a * common, b * common
        assert gcd(a, b) == _sympy_gcd(a, b)


class TestDiff:
    def test_product_power(self):
        assert diff(P("x^3*y"), "x") == P("3*x^2*y")

    def test_vanishing(self):
        assert diff(P("x^3"), "y") == Poly.zero(XY)

    def test_term_by_term(self):
        p = P("x^2 + 2*x*y^3 + y^6")
        # oracle: power rule applied per term by hand
        assert diff(p, "x") == P("2*x + 2*y^3")
        assert diff(p, "y") == P("6*x*y^2 + 6*y^5")

    def test_unknown_variable(self):
        with pytest.raises(ValueError):
            diff(X, "z")

    @given(xy_polys(max_terms=3), xy_polys(max_terms=3))
    def test_leibniz(self, a, b):
        for v in ("x", "y"):
            assert diff(a * b, v) == diff(a, v) * b + a * diff(b, v)


class TestSubst:
    def test_direct_expansion(self):
        assert subst(P("x^2 + y"), [P("x + y"), P("y^2")]) == \
            P("x^2 + 2*x*y + y^2 + y^2")

    def test_relation_vanishes(self):
        rel = PX("X0*X2 - X1^2", 2)
        assert subst(rel, [P("x^2"), P("x*y"), P("y^2")]) == Poly.zero(XY)

    def test_identity_images(self):
        p = P("3*x^2 - 1/2*y")
        assert subst(p, [X, Y]) == p

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            subst(P("x"), [X])
        with pytest.raises(ValueError):
            subst(P("x"), [X, Y, X])

    @given(xy_polys(max_terms=3, max_exp=3), xy_polys(max_terms=3, max_exp=3),
           xy_polys(max_terms=2, max_exp=2), xy_polys(max_terms=2, max_exp=2))
    def test_homomorphism(self, a, b, im1, im2):
        images = [im1, im2]
        assert subst(a * b, images) == subst(a, images) * subst(b, images)
        assert subst(a + b, images) == subst(a, images) + subst(b, images)


class TestGrading:
    def test_odd_component(self):
        assert graded_component(P("x + x^2 + y^3"), 2, 1) == P("x + y^3")

    def test_even_misses(self):
        assert graded_component(P("x^2"), 2, 1) == Poly.zero(XY)

    @given(xy_polys(), st.integers(2, 5))
    def test_partition(self, p, n):
        parts = graded_components(p, n)
        total = Poly.zero(XY)
        for r, q in parts.items():
            assert in_component(q, n, r)
            total = total + q
        assert total == p

    @given(xy_polys(max_terms=3), xy_polys(max_terms=3), st.integers(2, 4),
           st.integers(0, 3), st.integers(0, 3))
    def test_multiplicative(self, a, b, n, i, j):
        i, j = i % n, j % n
        pa = graded_component(a, n, i)
        pb = graded_component(b, n, j)
        assert in_component(pa * pb, n, (i + j) % n)

    @given(xy_polys(max_terms=3, max_exp=4, allow_zero=False), st.integers(2, 4))
    def test_power_lemma(self, p, n):
        # single graded class <=> p^n lands in class 0
        classes = sorted(graded_components(p, n))
        power = p**n
        if len(classes) == 1:
            assert in_component(power, n, 0)
        else:
            assert not in_component(power, n, 0)


class TestWParts:
    def test_total_degree_weight(self):
        parts = w_parts(P("x + y^2"), Weight(1, 1))
        assert parts == {1: P("x"), 2: P("y^2")}

    def test_two_monomials_one_level(self):
        parts = w_parts(P("y - x^3"), Weight(2, 6))
        assert parts == {6: P("y - x^3")}

    def test_zero_weight_component(self):
        assert w_parts(P("y^5"), Weight(1, 0)) == {0: P("y^5")}

    def test_weight_must_be_nonzero(self):
        with pytest.raises(ValueError):
            Weight(0, 0)

    @given(xy_polys(), st.integers(-3, 3), st.integers(-3, 3))
    def test_parts_sum(self, p, w1, w2):
        if w1 == 0 and w2 == 0:
            return
        total = Poly.zero(XY)
        for q in w_parts(p, Weight(w1, w2)).values():
            total = total + q
        assert total == p


class TestNthRoot:
    def test_cube(self):
        assert nth_root_rational(8, 3) == 2

    def test_even_picks_positive(self):
        assert nth_root_rational(Fraction(1, 16), 4) == Fraction(1, 2)

    def test_irrational(self):
        with pytest.raises(NeedsRootExtension) as info:
            nth_root_rational(2, 2)
        assert info.value.value == 2 and info.value.degree == 2

    def test_negative_even(self):
        with pytest.raises(NeedsRootExtension):
            nth_root_rational(-4, 2)

    def test_negative_odd(self):
        assert nth_root_rational(-27, 3) == -3

    @given(st.fractions(min_value=-9, max_value=9, max_denominator=7).filter(lambda f: f != 0),
           st.integers(2, 6))
    def test_round_trip(self, v, n):
        if n % 2 == 0:
            v = abs(v)
        assert nth_root_rational(v**n, n) == v


class TestPolyBasics:
    def test_structural_equality_and_hash(self):
        a = P("x + 2*y")
        b = P("2*y + x")
        assert a == b and hash(a) == hash(b)

    def test_immutability(self):
        with pytest.raises(AttributeError):
            X.terms = {}

    def test_invalid_exponents(self):
        with pytest.raises(ValueError):
            Poly(XY, {(1,): 1})
        with pytest.raises(ValueError):
            Poly(XY, {(-1, 0): 1})
