"""Plane automorphisms: composition, decomposition, inversion, gradedness."""

import pytest
from hypothesis import given, strategies as st

from veronese import (XY, Automorphism2, Linear, NotAnAutomorphism, Poly,
                      ShearX, ShearY, SWAP, compose, compose_all, decompose,
                      equal_mod_E, invert, is_n_graded_aut)
from veronese.rng import CounterRng, sample_tame_word

from conftest import P

IDENT = Automorphism2.identity()
SWAP_A = SWAP.as_automorphism()


def A(fx, fy):
    return Automorphism2(P(fx), P(fy))


class TestCompose:
    def test_convention(self):
        # second map's polynomials evaluated at the first map's images
        assert compose(A("y", "x"), A("x - 2*y^3", "y")) == A("-2*x^3 + y", "x")

    def test_identity_neutral(self):
        a = A("x + y^3", "2*y")
        assert compose(a, IDENT) == a
        assert compose(IDENT, a) == a

    def test_associative(self):
        rng = CounterRng("compose-assoc")
        for i in range(10):
            _, a = sample_tame_word(rng.child((i, 0)), 2, max_factors=2, term_cap=40)
            _, b = sample_tame_word(rng.child((i, 1)), 2, max_factors=2, term_cap=40)
            _, c = sample_tame_word(rng.child((i, 2)), 2, max_factors=2, term_cap=40)
            assert compose(compose(a, b), c) == compose(a, compose(b, c))

    def test_action_matches_substitution(self):
        a = A("x + y^3", "y")
        p = P("x^2 - y")
        assert a.apply_to(p) == P("x^2 + 2*x*y^3 + y^6 - y")


class TestFactors:
    def test_linear_inverse(self):
        m = Linear(2, 1, 3, 2)
        assert compose(m.as_automorphism(), m.inverse().as_automorphism()) == IDENT

    def test_singular_rejected(self):
        with pytest.raises(NotAnAutomorphism):
            Linear(1, 2, 2, 4)

    def test_shear_forms(self):
        assert ShearX(2, 3).as_automorphism() == A("x - 2*y^3", "y")
        assert ShearY(2, 3).as_automorphism() == A("x", "y - 2*x^3")

    def test_shear_exponent_positive(self):
        with pytest.raises(ValueError):
            ShearX(1, 0)


class TestDecompose:
    def test_elementary_input(self):
        assert decompose(A("x - 2*y^3", "y")) == [ShearX(2, 3)]

    def test_swapped_shear(self):
        factors = decompose(A("-2*x^3 + y", "x"))
        assert factors == [Linear(0, 1, 1, 0), ShearX(2, 3)]
        assert compose_all(factors) == A("-2*x^3 + y", "x")

    def test_identity_empty(self):
        assert decompose(IDENT) == []

    def test_linear_only(self):
        assert decompose(A("2*x + y", "x - y")) == [Linear(2, 1, 1, -1)]

    def test_rejects_non_automorphisms(self):
        for fx, fy in [("x", "x*y"), ("x + y^2", "y^2"), ("x^2", "y"),
                       ("x", "2"), ("x + 1", "y")]:
            with pytest.raises(NotAnAutomorphism):
                decompose(A(fx, fy))

    def test_soundness_on_random_words(self):
        rng = CounterRng("decompose-sound")
        for n in (2, 3, 4, 5):
            for i in range(20):
                _, a = sample_tame_word(rng.child((n, i)), n)
                assert compose_all(decompose(a)) == a

    def test_graded_words_have_graded_shears(self):
        rng = CounterRng("decompose-graded")
        for n in (2, 3, 4, 5):
            for i in range(15):
                _, a = sample_tame_word(rng.child((n, i)), n)
                for f in decompose(a):
                    if isinstance(f, (ShearX, ShearY)):
                        assert f.m % n == 1


class TestInvert:
    def test_shear(self):
        assert invert(A("x + y^3", "y")) == A("x - y^3", "y")

    def test_swap_self_inverse(self):
        assert invert(SWAP_A) == SWAP_A

    def test_two_sided_on_random_words(self):
        rng = CounterRng("invert")
        for n in (2, 3):
            for i in range(15):
                _, a = sample_tame_word(rng.child((n, i)), n,
                                        max_factors=4, term_cap=60)
                inv = invert(a)
                assert compose(a, inv) == IDENT
                assert compose(inv, a) == IDENT

    def test_rejects_non_automorphism(self):
        with pytest.raises(NotAnAutomorphism):
            invert(A("x", "x*y"))


class TestGraded:
    def test_examples(self):
        assert is_n_graded_aut(A("x + y^3", "y"), 2)
        assert not is_n_graded_aut(A("x + y^2", "y"), 2)
        assert not is_n_graded_aut(A("x + 1", "y"), 2)

    def test_linear_always_graded(self):
        for n in (2, 3, 4, 5):
            assert is_n_graded_aut(A("2*x + y", "x - y"), n)

    def test_sampled_words_are_graded(self):
        rng = CounterRng("graded-words")
        for n in (2, 3, 4, 5):
            for i in range(10):
                _, a = sample_tame_word(rng.child((n, i)), n)
                assert is_n_graded_aut(a, n)


class TestEqualModE:
    def test_negation_even(self):
        assert equal_mod_E(A("x", "y"), A("-x", "-y"), 2)

    def test_negation_odd(self):
        assert not equal_mod_E(A("x", "y"), A("-x", "-y"), 3)

    def test_reflexive(self):
        a = A("x + y^3", "y")
        assert equal_mod_E(a, a, 2)

    def test_scaled_shears(self):
        a = A("x + y^3", "y")
        assert equal_mod_E(a, A("-x - y^3", "-y"), 2)
        assert not equal_mod_E(a, A("2*x + 2*y^3", "2*y"), 2)

    def test_equivalence_relation(self):
        rng = CounterRng("mod-e-equiv")
        n = 2
        for i in range(8):
            _, a = sample_tame_word(rng.child((i, 0)), n, max_factors=3, term_cap=50)
            _, b = sample_tame_word(rng.child((i, 1)), n, max_factors=3, term_cap=50)
            _, c = sample_tame_word(rng.child((i, 2)), n, max_factors=3, term_cap=50)
            neg_a = Automorphism2(-a.fx, -a.fy)
            # symmetry and transitivity through the scalar class of a
            assert equal_mod_E(a, neg_a, n) and equal_mod_E(neg_a, a, n)
            if equal_mod_E(a, b, n) and equal_mod_E(b, c, n):
                assert equal_mod_E(a, c, n)
