"""Derivations: Leibniz, gradedness, restriction/lifting, exponentials."""

import pytest
from hypothesis import given, settings, strategies as st

from veronese import (XY, Automorphism2, Derivation2, DerivationV,
                      NotADerivation, NotGraded, NotInAlgebra,
                      NotLocallyNilpotent, Poly, VeroneseContext, apply,
                      compose, conjugate, exp_lnd, invert,
                      is_n_graded_derivation, lift_derivation, restrict_to_V)
from veronese.rng import CounterRng, sample_graded_derivation, sample_lnd, sample_tame_word

from conftest import P, xy_polys

SLIDE = Derivation2(P("y"), P("0"))
DEX = Derivation2(P("y - x^3"), P("3*x^2*y - 3*x^5"))


class TestApply:
    def test_slide_on_square(self):
        assert apply(SLIDE, P("x^2")) == P("2*x*y")

    def test_constants_killed(self):
        assert apply(DEX, P("5")) == P("0")

    @given(xy_polys(max_terms=3, max_exp=3), xy_polys(max_terms=3, max_exp=3))
    def test_leibniz(self, a, b):
        assert apply(DEX, a * b) == apply(DEX, a) * b + a * apply(DEX, b)


class TestGradedness:
    def test_examples(self):
        assert is_n_graded_derivation(SLIDE, 2)
        assert not is_n_graded_derivation(Derivation2(P("1"), P("0")), 2)
        assert is_n_graded_derivation(DEX, 2)

    def test_zero_everywhere(self):
        for n in (2, 3, 4):
            assert is_n_graded_derivation(Derivation2.zero(), n)


class TestRestrict:
    def test_slide_n2(self):
        dv = restrict_to_V(SLIDE, VeroneseContext(2))
        assert [str(p) for p in dv.images] == ["2*x*y", "y^2", "0"]

    def test_slide_n3(self):
        dv = restrict_to_V(SLIDE, VeroneseContext(3))
        assert [str(p) for p in dv.images] == ["3*x^2*y", "2*x*y^2", "y^3", "0"]

    def test_zero(self):
        dv = restrict_to_V(Derivation2.zero(), VeroneseContext(2))
        assert all(p.is_zero for p in dv.images)

    def test_rejects_ungraded(self):
        with pytest.raises(NotGraded):
            restrict_to_V(Derivation2(P("1"), P("0")), VeroneseContext(2))

    def test_images_validated(self):
        with pytest.raises(NotInAlgebra):
            DerivationV(VeroneseContext(2), (P("x"), P("0"), P("0")))


class TestLift:
    def test_round_trip_example(self):
        dv = DerivationV(VeroneseContext(2), (P("2*x*y"), P("y^2"), P("0")))
        assert lift_derivation(dv) == SLIDE

    def test_zero(self):
        dv = DerivationV(VeroneseContext(2), (P("0"), P("0"), P("0")))
        assert lift_derivation(dv) == Derivation2.zero()

    def test_incompatible_images(self):
        dv = DerivationV(VeroneseContext(2), (P("x^2"), P("0"), P("0")))
        with pytest.raises(NotADerivation):
            lift_derivation(dv)

    def test_inexact_division(self):
        dv = DerivationV(VeroneseContext(2), (P("y^2"), P("0"), P("0")))
        with pytest.raises(NotADerivation):
            lift_derivation(dv)

    def test_lift_after_restrict_many(self):
        rng = CounterRng("lift-restrict")
        for n in (2, 3, 4, 5):
            ctx = VeroneseContext(n)
            for i in range(25):
                d = sample_graded_derivation(rng.child((n, i)), n)
                assert lift_derivation(restrict_to_V(d, ctx)) == d

    def test_restrict_after_lift(self):
        rng = CounterRng("restrict-lift")
        for n in (2, 3):
            ctx = VeroneseContext(n)
            for i in range(10):
                dv = restrict_to_V(sample_graded_derivation(rng.child((n, i)), n), ctx)
                assert restrict_to_V(lift_derivation(dv), ctx) == dv

    def test_perturbed_images_rejected(self):
        rng = CounterRng("perturb")
        for n in (2, 3, 4):
            ctx = VeroneseContext(n)
            for i in range(10):
                d = sample_graded_derivation(rng.child((n, i)), n)
                images = list(restrict_to_V(d, ctx).images)
                # break one middle equation with a nonzero member polynomial
                images[1] = images[1] + Poly.monomial(XY, (n, n), 3)
                with pytest.raises(NotADerivation):
                    lift_derivation(DerivationV(ctx, tuple(images)))


class TestExp:
    def test_slide(self):
        assert exp_lnd(SLIDE) == Automorphism2(P("x + y"), P("y"))

    def test_zero(self):
        assert exp_lnd(Derivation2.zero()) == Automorphism2.identity()

    def test_not_nilpotent(self):
        with pytest.raises(NotLocallyNilpotent) as info:
            exp_lnd(Derivation2(P("x"), P("0")), cap=10)
        assert info.value.cap == 10

    def test_triangular_with_factorials(self):
        d = Derivation2(P("y^2"), P("0"))
        assert exp_lnd(d) == Automorphism2(P("x + y^2"), P("y"))

    def test_inverse_pair(self):
        rng = CounterRng("exp-pairs")
        for n in (2, 3):
            for i in range(6):
                d, _, _ = sample_lnd(rng.child((n, i)), n,
                                     max_factors=2, term_cap=40)
                forward = exp_lnd(d)
                backward = exp_lnd(-d)
                assert compose(forward, backward) == Automorphism2.identity()
                assert compose(backward, forward) == Automorphism2.identity()

    def test_lifted_lnd_is_lnd(self):
        # a nilpotent derivation of the subalgebra lifts to a nilpotent one
        rng = CounterRng("lift-lnd")
        for n in (2, 3):
            ctx = VeroneseContext(n)
            for i in range(6):
                d, _, _ = sample_lnd(rng.child((n, i)), n,
                                     max_factors=2, term_cap=40)
                lifted = lift_derivation(restrict_to_V(d, ctx))
                exp_lnd(lifted)  # must not raise


class TestConjugate:
    def test_normalizing_example(self):
        a = Automorphism2(P("x"), P("y - x^3"))
        assert conjugate(DEX, a) == SLIDE

    def test_identity_action(self):
        assert conjugate(DEX, Automorphism2.identity()) == DEX

    def test_action_invertible(self):
        rng = CounterRng("conj-inverse")
        for i in range(8):
            d = sample_graded_derivation(rng.child(i), 2)
            _, a = sample_tame_word(rng.child((i, "w")), 2,
                                    max_factors=2, term_cap=40)
            assert conjugate(conjugate(d, a), invert(a)) == d

    def test_right_action(self):
        rng = CounterRng("conj-action")
        for i in range(8):
            d = sample_graded_derivation(rng.child(i), 2)
            _, a = sample_tame_word(rng.child((i, "a")), 2,
                                    max_factors=2, term_cap=40)
            _, b = sample_tame_word(rng.child((i, "b")), 2,
                                    max_factors=2, term_cap=40)
            assert conjugate(d, compose(a, b)) == conjugate(conjugate(d, a), b)

    def test_operator_identity_on_random_polys(self):
        # conjugate(D, a)(u) == a_inv(D(a(u))) for arbitrary u, not just x, y
        rng = CounterRng("conj-operator")
        a = Automorphism2(P("x + y^3"), P("y"))
        a_inv = invert(a)
        d2 = conjugate(DEX, a)
        for i in range(6):
            u = sample_graded_derivation(rng.child(i), 2).fx  # any polynomial
            assert apply(d2, u) == a_inv.apply_to(apply(DEX, a.apply_to(u)))
