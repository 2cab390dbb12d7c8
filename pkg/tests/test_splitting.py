"""
F(a, w) の評価と部分分数分解のテスト
"""

from fractions import Fraction

import numpy as np
import pytest

from src.dyson import (
    FactorExpr,
    f_eval,
    f_expr,
    sample_point,
    split_terms,
    verify_splitting,
    verify_splitting_random,
)
from src.dyson.splitting import splitting_rhs
from src.dyson.vectors import compositions
from src.laurent import RationalPoint
from src.qseries import PochSpec
from src.utils.config import SamplingConfig
from src.utils.errors import DimensionMismatch, PoleAtPoint


class TestFEval:
    def test_single_variable_empty(self):
        point = RationalPoint(q=2, values=(1, 1))
        assert f_eval((0,), point) == 2

    def test_single_variable(self):
        point = RationalPoint(q=2, values=(1, 3))
        assert f_eval((1,), point) == Fraction(9, 5)

    def test_pole(self):
        # 1 - q^-1 x1/w1 = 0
        point = RationalPoint(q=2, values=(2, 1))
        with pytest.raises(PoleAtPoint):
            f_eval((0,), point)

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            f_eval((1, 1), RationalPoint(q=2, values=(1, 3)))

    def test_product_of_factors(self):
        point = RationalPoint(q=Fraction(3, 2), values=(2, 3, 5, 7))
        expr = f_expr((1, 2))
        expected = Fraction(1)
        for value in expr.factor_values(point):
            expected *= value
        assert expr.evaluate(point) == expected


class TestSplitTerms:
    def test_single_variable_empty(self):
        terms = split_terms((0,))
        assert [k for k, _ in terms.a_terms] == [-1]
        assert terms.b_terms == ()
        _, a_minus_one = terms.a_terms[0]
        assert a_minus_one.evaluate(RationalPoint(q=3, values=(5, 7))) == 1

    @pytest.mark.parametrize("a", [(2, 1, 2), (0, 1, 0), (1, 0, 3), (2,)])
    def test_term_counts(self, a):
        terms = split_terms(a)
        assert len(terms.a_terms) == a[0] + 1
        assert len(terms.b_terms) == sum(a[1:])

    def test_b_terms_shape(self):
        n = 3
        for (i, _), expr in split_terms((2, 1, 2)).b_terms:
            assert expr.sign == -1
            expected = [0] * (2 * n)
            expected[i - 1] = 1
            expected[0] = -1
            assert list(expr.prefactor) == expected

    def test_render(self):
        text = f_expr((1, 1)).render()
        assert "^-1" in text
        assert text.startswith("(")


class TestVerifySplitting:
    def test_single_variable(self):
        point = RationalPoint(q=Fraction(2, 3), values=(5, 7))
        assert verify_splitting((0,), point)

    def test_two_variables_by_hand(self):
        # a = (0, 1): F = (1 - q x2/x1) / ((1 - x1/(q w1))(1 - x2/w1)(q^-1 x2/w2;q)_2)
        point = RationalPoint(q=Fraction(5, 3), values=(2, 3, 11, 13))
        assert f_eval((0, 1), point) == splitting_rhs((0, 1), point)

    def test_random_points_pair(self, rng):
        results = verify_splitting_random((1, 1), rng)
        assert len(results) == 5
        assert all(ok for _, ok in results)

    def test_random_points_triple(self, rng):
        results = verify_splitting_random((2, 1, 2), rng, points=5)
        assert all(ok for _, ok in results)

    @pytest.mark.parametrize("a", [a for n in (1, 2) for a in compositions(n, 2)])
    def test_small_grid(self, a, rng):
        assert all(ok for _, ok in verify_splitting_random(a, rng, points=3))

    def test_reproducible(self):
        first = verify_splitting_random((1, 2), np.random.default_rng([7, 3]))
        second = verify_splitting_random((1, 2), np.random.default_rng([7, 3]))
        assert [p for p, _ in first] == [p for p, _ in second]

    def test_retry_budget(self, rng):
        # 座標は 2 と 3、q は 2/3 か 3/2 なので 1/4 の確率で x1/w1 = q の極に当たる
        sampling = SamplingConfig(q_min=2, q_max=3, prime_pool=[2, 3], pole_retry_budget=3)
        with pytest.raises(PoleAtPoint):
            for _ in range(200):
                verify_splitting_random((0,), rng, points=5, sampling=sampling)


class TestSamplePoint:
    def test_shape(self, rng):
        point = sample_point(6, rng)
        assert point.dim == 6
        assert len(set(point.values)) == 6
        assert point.q != 1
        assert 2 <= point.q.numerator <= 7 or point.q.denominator > 1


class TestFactorExpr:
    def test_multiply(self):
        left = FactorExpr(nvars=1, sign=-1, qpow=2, prefactor=(1,), factors=(PochSpec((1,), 0, 1),))
        right = FactorExpr(nvars=1, qpow=-1, factors=(PochSpec((1,), 1, 1, exponent=-1),))
        product = left * right
        point = RationalPoint(q=3, values=(5,))
        assert product.evaluate(point) == left.evaluate(point) * right.evaluate(point)
        assert product.sign == -1
        assert product.qpow == 1

    def test_dimension_checks(self):
        with pytest.raises(DimensionMismatch):
            FactorExpr(nvars=2, prefactor=(1,))
        with pytest.raises(DimensionMismatch):
            FactorExpr(nvars=2, factors=(PochSpec((1,), 0, 1),))
        with pytest.raises(DimensionMismatch):
            FactorExpr(nvars=1).evaluate(RationalPoint(q=2, values=(1, 2)))
