"""
一般化 q-Dyson 定数項・順序・書き換え恒等式のテスト
"""

import pytest

from src.dyson import (
    check_lemma31,
    d_brute,
    d_closed,
    d_integrand,
    d_recursive,
    dominance_leq,
    dt_brute,
    dt_kadell,
    dyson_product,
    expansion_relation_11,
    lemma31_cases,
    prec_leq,
    prec_less,
    qdyson_rhs,
    revlex_leq,
    revlex_less,
    vplus,
)
from src.dyson.vectors import compositions, integer_vectors, pad, partitions_up_to
from src.exact import QLaurent, q_power
from src.laurent import XPoly
from src.utils.errors import BadShape, DimensionMismatch, NegativePart, RangeViolation, SizeMismatch


def small_grid(n_max=2, a_max=1, size_max=3):
    for n in range(1, n_max + 1):
        for a in compositions(n, a_max):
            for lam in partitions_up_to(size_max, n, 4):
                yield a, pad(lam, n)


class TestDysonProduct:
    def test_pair(self, q):
        expected = XPoly(2, {(0, 0): 1 + q, (1, -1): -1, (-1, 1): -q})
        assert dyson_product((1, 1)) == expected

    def test_trivial(self):
        assert dyson_product((0, 0, 0)) == 1
        assert dyson_product((3,)) == 1

    @pytest.mark.parametrize("a", list(compositions(3, 2)))
    def test_homogeneous_of_degree_zero(self, a):
        assert dyson_product(a).is_homogeneous(0)

    def test_rhs(self, q):
        assert qdyson_rhs((0, 0)) == 1
        assert qdyson_rhs((1, 1)) == 1 + q
        assert qdyson_rhs((2, 1)) == 1 + q + q ** 2

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_qdyson_identity(self, n):
        for a in compositions(n, 2):
            assert dyson_product(a).constant_term() == qdyson_rhs(a)

    def test_negative_part(self):
        with pytest.raises(NegativePart):
            dyson_product((1, -1))


class TestBruteForce:
    def test_d_examples(self, q):
        assert d_brute((1,), (1,), (2,)) == q_power(-1) + 1 + q
        assert d_brute((0, 0), (0, 0), (1, 1)) == 1 + q
        assert d_brute((0, 2), (2, 0), (1, 1)) == 0

    def test_dt_examples(self, q):
        assert dt_brute((1,), (1,), (1, 1)) == q
        for a in [(1, 1), (2, 1), (1, 0, 2)]:
            assert dt_brute((0,), (0,), a) == qdyson_rhs(a)
        for a in compositions(2, 2):
            assert dt_brute((1, 2), (3,), a) == 0

    def test_homogeneity(self):
        assert d_brute((1, 1), (1,), (1, 1)) == 0
        assert dt_brute((2, 0), (1,), (1, 1)) == 0

    def test_d_rejects_long_lambda(self):
        with pytest.raises(DimensionMismatch):
            d_brute((2, 1), (1, 1, 1), (1, 1))

    def test_dt_accepts_long_lambda(self):
        value = dt_brute((2, 1), (1, 1, 1), (1, 1))
        assert isinstance(value, QLaurent)

    def test_bad_partition(self):
        with pytest.raises(BadShape):
            d_brute((1, 2), (1, 2), (1, 1))

    def test_integrand_is_homogeneous(self):
        assert d_integrand((2, 1), (1, 1)).is_homogeneous(3)


class TestClosedForms:
    def test_d_closed_examples(self, q):
        assert d_closed((0, 0), (1, 1)) == 1 + q
        assert d_closed((1,), (2,)) == q_power(-1) * (1 + q + q ** 2)
        assert d_closed((1, 1), (1, 1)) == q_power(-2) * (1 + q + q ** 2) * (1 + q)

    @pytest.mark.parametrize("a,lam", list(small_grid()))
    def test_product_branch(self, a, lam):
        assert d_brute(lam, lam, a) == d_closed(lam, a)

    @pytest.mark.parametrize("a,lam", list(small_grid()))
    def test_vanishing_branch(self, a, lam):
        for v in integer_vectors(len(a), sum(lam), -1, 4):
            if prec_less(v, lam):
                assert d_brute(v, lam, a) == 0

    @pytest.mark.parametrize("a,lam", list(small_grid()))
    def test_corollary(self, a, lam):
        for v in integer_vectors(len(a), sum(lam), 0, 4):
            if revlex_less(vplus(v), lam):
                assert d_brute(v, lam, a) == 0

    def test_kadell_examples(self, q):
        assert dt_kadell((1, 0), 1, (1, 1)) == q
        assert dt_kadell((1, 0), 1, (0, 1)) == 0
        assert dt_kadell((1, 1), 2, (1, 1)) == 0

    def test_kadell_bad_shape(self):
        with pytest.raises(BadShape):
            dt_kadell((1, 0), 2, (1, 1))
        with pytest.raises(BadShape):
            dt_kadell((2, -1), 1, (1, 1))
        with pytest.raises(BadShape):
            dt_kadell((0, 0), 0, (1, 1))

    @pytest.mark.parametrize("n", [1, 2])
    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_kadell_matches_brute(self, n, r):
        for a in compositions(n, 2):
            for v in integer_vectors(n, r, 0, r):
                assert dt_brute(v, (r,), a) == dt_kadell(v, r, a)


class TestRecursion:
    def test_examples(self, q):
        assert d_recursive((1, 1), (1, 1), (1, 1)) == q_power(-2) * (1 + q + q ** 2) * (1 + q)
        assert d_recursive((0, 2), (2,), (1, 1)) == 0
        assert d_recursive((), (), ()) == 1

    def test_falls_back_when_guard_fails(self):
        # λ₁ = 1 < max(v) = 2
        v, lam, a = (0, 2), (1, 1), (1, 1)
        assert d_recursive(v, lam, a) == d_brute(v, lam, a)

    @pytest.mark.parametrize("a,lam", list(small_grid()))
    def test_matches_brute(self, a, lam):
        for v in integer_vectors(len(a), sum(lam), -1, 4):
            if lam[0] >= max(v):
                assert d_recursive(v, lam, a) == d_brute(v, lam, a)


class TestVanishingExamples:
    def test_cai_contrapositive(self):
        for a in compositions(2, 2):
            for lam in partitions_up_to(3, 3, 3):
                for v in integer_vectors(2, sum(lam), -1, 3):
                    if not dominance_leq(lam, vplus(v)):
                        assert dt_brute(v, lam, a) == 0

    @pytest.mark.parametrize("v", [(0, 5, 2), (5, 0, 2)])
    def test_d_vanishes_outside_order(self, v):
        assert not prec_leq(v, (4, 3, 0))
        assert d_brute(v, (4, 3), (1, 1, 1)) == 0

    @pytest.mark.parametrize("v", [(5, 2, 0), (2, 0, 5), (2, 5, 0), (0, 2, 5)])
    def test_d_nonvanishing(self, v):
        assert not d_brute(v, (4, 3), (1, 1, 1)).is_zero()

    @pytest.mark.parametrize("a", [a for n in (2, 3) for a in compositions(n, 1)])
    def test_expansion_relation(self, a):
        lhs, rhs = expansion_relation_11(a)
        assert lhs == rhs

    def test_expansion_relation_needs_two_variables(self):
        with pytest.raises(DimensionMismatch):
            expansion_relation_11((1,))


class TestOrders:
    def test_prec(self):
        assert prec_leq((1, 2), (1, 2))
        assert prec_leq((0, 2), (2, 0))
        assert not prec_leq((2, 1), (1, 2))
        assert prec_less((0, 2), (2, 0))
        assert not prec_less((2, 0), (2, 0))

    def test_prec_pads_with_zeros(self):
        assert prec_leq((1, 1), (2,))
        assert prec_leq((2,), (2, 0, 0))

    def test_dominance(self):
        assert dominance_leq((2, 2), (2, 2))
        assert dominance_leq((2, 2), (3, 1))
        assert not dominance_leq((3, 1), (2, 2))
        with pytest.raises(SizeMismatch):
            dominance_leq((2,), (1,))

    def test_revlex(self):
        assert revlex_leq((3, 1), (3, 1))
        assert revlex_leq((2, 2), (3, 1))
        assert not revlex_leq((3, 1), (2, 2))
        assert revlex_less((2, 1, 1), (2, 2))
        with pytest.raises(SizeMismatch):
            revlex_leq((3,), (2,))

    @pytest.mark.parametrize("size", range(1, 7))
    def test_revlex_agrees_with_prec(self, size):
        parts = list(partitions_up_to(size, size, size))
        parts = [lam for lam in parts if sum(lam) == size]
        for lam in parts:
            for mu in parts:
                assert revlex_leq(lam, mu) == prec_leq(lam, mu)

    def test_vplus(self):
        assert vplus((0, 2)) == (2, 0)
        assert vplus((1, 3, 2)) == (3, 2, 1)
        assert vplus((3, 2, 1)) == (3, 2, 1)


class TestShiftedFactorialRewrites:
    def test_boundary_cases(self):
        assert check_lemma31(2, 3, -1, "a")
        assert check_lemma31(0, 2, 2, "b2")
        assert check_lemma31(1, 2, 0, "b1")

    @pytest.mark.parametrize("which,i,j,k", list(lemma31_cases(4)))
    def test_all_in_range(self, which, i, j, k):
        assert check_lemma31(i, j, k, which)

    def test_range_violation(self):
        with pytest.raises(RangeViolation):
            check_lemma31(1, 2, 2, "a")
        with pytest.raises(RangeViolation):
            check_lemma31(1, 0, 0, "b1")
        with pytest.raises(RangeViolation):
            check_lemma31(1, 2, 3, "b2")
        with pytest.raises(RangeViolation):
            check_lemma31(1, 2, 0, "c")

    def test_case_count(self):
        # i, j <= 4: a は 5·15、b1 は 5·10、b2 は 5·15
        assert len(list(lemma31_cases(4))) == 200
