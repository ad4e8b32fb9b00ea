"""Quotient-ring machinery: membership, normal forms, basis, confluence."""

import pytest
from hypothesis import given, strategies as st

from veronese import (BasisMonomial, NotInAlgebra, Poly, Relation,
                      VeroneseContext, enum_basis, express, groebner_reduce,
                      is_normal_form, member, phi, s_polynomial, x_ring)

from conftest import P, PX, big_polys, xy_polys

CONTEXTS = {n: VeroneseContext(n) for n in (2, 3, 4, 5)}


class TestMember:
    def test_divisible_degrees(self):
        assert member(P("x^3*y"), CONTEXTS[2])
        assert member(P("x^2*y^4"), CONTEXTS[3])

    def test_odd_degree_fails(self):
        assert not member(P("x^2*y"), CONTEXTS[2])

    def test_zero_and_constants(self):
        assert member(P("0"), CONTEXTS[3])
        assert member(P("7"), CONTEXTS[3])

    @given(big_polys(3, max_terms=3, max_exp=3))
    def test_images_are_members(self, q):
        assert member(phi(q, CONTEXTS[3]), CONTEXTS[3])


class TestPhiExpress:
    def test_generator_images(self):
        for n in (2, 3, 4):
            ctx = CONTEXTS[n]
            for i in range(n + 1):
                image = phi(Poly.variable(ctx.big_ring, f"X{i}"), ctx)
                assert image == Poly.monomial(ctx.xy_ring, (n - i, i))

    def test_relations_vanish(self):
        for n in (2, 3, 4, 5):
            ctx = CONTEXTS[n]
            for rel in ctx.relations():
                assert phi(rel.as_poly(), ctx).is_zero

    def test_express_example(self):
        # oracle: phi(X0*X1^2) = x^2 * (x*y)^2 = x^4 y^2
        assert express(P("x^4*y^2"), CONTEXTS[2]) == PX("X0*X1^2", 2)

    def test_express_generator(self):
        assert express(P("y^2"), CONTEXTS[2]) == PX("X2", 2)

    def test_express_rejects_non_member(self):
        with pytest.raises(NotInAlgebra):
            express(P("x^2*y"), CONTEXTS[2])

    @given(xy_polys(max_terms=4, max_exp=6), st.integers(2, 5))
    def test_phi_express_identity_on_members(self, p, n):
        ctx = CONTEXTS[n]
        m = Poly(p.ring, {e: c for e, c in p.terms.items() if sum(e) % n == 0})
        expressed = express(m, ctx)
        assert is_normal_form(expressed, ctx)
        assert phi(expressed, ctx) == m

    @given(big_polys(3, max_terms=4, max_exp=3))
    def test_express_phi_is_reduce(self, q):
        ctx = CONTEXTS[3]
        assert express(phi(q, ctx), ctx) == groebner_reduce(q, ctx)


class TestReduce:
    def test_single_step(self):
        assert groebner_reduce(PX("X0*X2", 3), CONTEXTS[3]) == PX("X1^2", 3)

    def test_two_steps(self):
        # oracle: phi of both sides is x^4 y^5
        ctx = CONTEXTS[3]
        out = groebner_reduce(PX("X0*X2*X3", 3), ctx)
        assert out == PX("X1*X2^2", 3)
        assert phi(out, ctx) == P("x^4*y^5")

    def test_already_normal(self):
        assert groebner_reduce(PX("X1^2", 2), CONTEXTS[2]) == PX("X1^2", 2)

    @given(big_polys(4, max_terms=4, max_exp=3), st.sampled_from(["outer", "inner"]))
    def test_reduce_properties(self, q, strategy):
        ctx = CONTEXTS[4]
        out = groebner_reduce(q, ctx, strategy=strategy)
        assert is_normal_form(out, ctx)
        assert phi(out, ctx) == phi(q, ctx)
        assert groebner_reduce(out, ctx, strategy=strategy) == out

    @given(big_polys(5, max_terms=4, max_exp=2))
    def test_strategy_independent(self, q):
        ctx = CONTEXTS[5]
        assert groebner_reduce(q, ctx, "outer") == groebner_reduce(q, ctx, "inner")


class TestSPolynomials:
    def test_all_overlaps_reduce_to_zero(self):
        for n in (2, 3, 4, 5):
            ctx = CONTEXTS[n]
            rels = ctx.relations()
            for r1 in rels:
                for r2 in rels:
                    if (r1.i, r1.j) >= (r2.i, r2.j):
                        continue
                    s = s_polynomial(r1, r2)
                    assert groebner_reduce(s, ctx).is_zero
                    assert groebner_reduce(s, ctx, "inner").is_zero

    def test_case_a_identity(self):
        # S(F_ij, F_il) = -F_{j+1,l} * X_i for j < l
        for n in (3, 4, 5):
            ctx = CONTEXTS[n]
            for i in range(1, n):
                for j in range(i, n - 1):
                    for l in range(j + 1, n):
                        s = s_polynomial(Relation(ctx, i, j), Relation(ctx, i, l))
                        xi = Poly.variable(ctx.big_ring, f"X{i}")
                        assert s == -(Relation(ctx, j + 1, l).as_poly()) * xi

    def test_case_b_identity(self):
        # S(F_ij, F_{j+2,l}) = F_{i,j+1} * X_l - X_i * F_{j+1,l}
        for n in (4, 5):
            ctx = CONTEXTS[n]
            for i in range(1, n):
                for j in range(i, n - 1):
                    for l in range(j + 2, n):
                        s = s_polynomial(Relation(ctx, i, j), Relation(ctx, j + 2, l))
                        xl = Poly.variable(ctx.big_ring, f"X{l}")
                        xi = Poly.variable(ctx.big_ring, f"X{i}")
                        expected = Relation(ctx, i, j + 1).as_poly() * xl \
                            - xi * Relation(ctx, j + 1, l).as_poly()
                        assert s == expected

    def test_case_c_identity(self):
        # S(F_ij, F_kj) = X_j * F_{i,k-1} for i < k
        for n in (3, 4, 5):
            ctx = CONTEXTS[n]
            for j in range(1, n):
                for i in range(1, j + 1):
                    for k in range(i + 1, j + 1):
                        s = s_polynomial(Relation(ctx, i, j), Relation(ctx, k, j))
                        xj = Poly.variable(ctx.big_ring, f"X{j}")
                        assert s == xj * Relation(ctx, i, k - 1).as_poly()


class TestBasis:
    def test_generators(self):
        names = [str(b) for b in enum_basis(CONTEXTS[2], 1)]
        assert names == ["X0", "X1", "X2"]

    def test_counts(self):
        assert len(enum_basis(CONTEXTS[2], 2)) == 5
        assert len(enum_basis(CONTEXTS[3], 2)) == 7
        for n in (2, 3, 4, 5):
            assert len(enum_basis(CONTEXTS[n], 0)) == 1
            for m in range(1, 8):
                assert len(enum_basis(CONTEXTS[n], m)) == n * m + 1

    def test_images_are_distinct_degree_monomials(self):
        for n in (2, 3, 4):
            ctx = CONTEXTS[n]
            for m in range(0, 5):
                images = [phi(b.as_poly(ctx), ctx) for b in enum_basis(ctx, m)]
                assert all(len(img.terms) == 1 for img in images)
                assert all(img.total_degree() == n * m for img in images if m)
                assert len(set(images)) == len(images)

    def test_count_matches_bivariate_span(self):
        # the number of bivariate monomials of total degree n*m
        for n in (2, 3, 4, 5):
            for m in range(1, 6):
                assert len(enum_basis(CONTEXTS[n], m)) == n * m + 1

    def test_canonical_pure_powers(self):
        assert BasisMonomial.canonical(2, 3, 0) == BasisMonomial(1, 0, 3)
        assert BasisMonomial.canonical(0, 3, 0) == BasisMonomial(0, 3, 0)
        assert BasisMonomial.canonical(1, 0, 0) == BasisMonomial(0, 0, 0)
        with pytest.raises(ValueError):
            BasisMonomial(2, 3, 0)

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            enum_basis(CONTEXTS[2], -1)


class TestContext:
    def test_minimum_index(self):
        with pytest.raises(ValueError):
            VeroneseContext(1)

    def test_relation_count(self):
        for n in (2, 3, 4, 5):
            assert len(CONTEXTS[n].relations()) == n * (n - 1) // 2

    def test_relation_bounds(self):
        with pytest.raises(ValueError):
            Relation(CONTEXTS[3], 0, 1)
        with pytest.raises(ValueError):
            Relation(CONTEXTS[3], 2, 1)
