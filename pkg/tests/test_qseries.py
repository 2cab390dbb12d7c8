"""
q シフト階乗・q 二項係数・恒等式のテスト
"""

from fractions import Fraction
from math import comb

import pytest

from src.dyson.vectors import partitions
from src.exact import QFraction, QLaurent, q_power
from src.laurent import RationalPoint, XPoly
from src.qseries import (
    PochSpec,
    check_prop41,
    check_qbinomial_theorem,
    pochhammer,
    prop41_sum,
    q_multinomial,
    qbinom,
    qbinom_quotient,
    qfact,
    qpoch,
)
from src.utils.errors import NotAMonomial, PoleAtPoint, RangeViolation


def box_partition_polynomial(n: int, k: int) -> QLaurent:
    """k×(n-k) の箱に入る分割をサイズで数えた母関数"""
    terms = {}
    for size in range(k * (n - k) + 1):
        terms[size] = sum(1 for _ in partitions(size, k, n - k))
    return QLaurent(terms)


class TestPochhammer:
    def test_empty(self):
        z = XPoly.variable(1, 0)
        assert pochhammer(z, 0) == 1

    def test_length_two(self, q):
        z = XPoly.variable(1, 0)
        expected = XPoly(1, {(0,): 1, (1,): -(1 + q), (2,): q})
        assert pochhammer(z, 2) == expected

    def test_ratio(self):
        ratio = XPoly.ratio(2, 0, 1)
        assert pochhammer(ratio, 1) == 1 - ratio

    def test_not_a_monomial(self):
        z = XPoly.variable(1, 0)
        with pytest.raises(NotAMonomial):
            pochhammer(1 + z, 2)

    def test_negative_length(self):
        with pytest.raises(RangeViolation):
            pochhammer(XPoly.variable(1, 0), -1)


class TestPochSpec:
    def test_value_matches_expansion(self):
        spec = PochSpec((1, -1), 2, 3)
        point = RationalPoint(q=Fraction(3, 2), values=(5, 7))
        assert spec.value(point) == spec.expand().eval_at(point)

    def test_reciprocal(self):
        spec = PochSpec((1,), -1, 2, exponent=-1)
        point = RationalPoint(q=2, values=(3,))
        # (3/2;2)_2 = (1 - 3/2)(1 - 3)
        assert spec.value(point) == 1 / (Fraction(-1, 2) * -2)

    def test_pole(self):
        spec = PochSpec((1,), 0, 1, exponent=-1)
        with pytest.raises(PoleAtPoint):
            spec.value(RationalPoint(q=2, values=(1,)))

    def test_validation(self):
        with pytest.raises(RangeViolation):
            PochSpec((1,), 0, -1)
        with pytest.raises(RangeViolation):
            PochSpec((1,), 0, 1, exponent=2)
        with pytest.raises(RangeViolation):
            PochSpec((1,), 0, 1, exponent=-1).expand()

    def test_render(self):
        assert PochSpec((1, -1), 1, 2).render() == "(q^1*x1*x2^-1;q)_2"
        assert PochSpec((0, 0), 0, 3, exponent=-1).render() == "(1;q)_3^-1"


class TestQBinomial:
    def test_examples(self, q):
        assert qbinom(0, 0) == 1
        assert qbinom(2, 1) == 1 + q
        assert str(qbinom(4, 2)) == "1 + q + 2*q^2 + q^3 + q^4"
        assert qbinom(4, 2) == qpoch(3, 2).divexact(qpoch(1, 2))

    def test_out_of_range(self):
        assert qbinom(2, 3) == 0
        assert qbinom(3, -1) == 0

    @pytest.mark.parametrize("n", range(13))
    def test_symmetry_and_quotient(self, n):
        for k in range(n + 1):
            value = qbinom(n, k)
            assert value == qbinom(n, n - k)
            assert value == qbinom_quotient(n, k)
            assert value.at_one() == comb(n, k)

    @pytest.mark.parametrize("n,k", [(4, 2), (6, 3), (7, 2), (8, 4)])
    def test_counts_partitions_in_a_box(self, n, k):
        assert qbinom(n, k) == box_partition_polynomial(n, k)

    def test_qfact(self, q):
        assert qfact(0) == 1
        assert qfact(1) == 1 - q
        assert qfact(2) == 1 - q - q ** 2 + q ** 3

    def test_multinomial(self, q):
        assert q_multinomial((0, 0, 0)) == 1
        assert q_multinomial((1, 1)) == 1 + q
        assert q_multinomial((2, 1)) == 1 + q + q ** 2
        # (q;q)_4 / ((q;q)_2 (q;q)_1 (q;q)_1)
        expected = QFraction.normalize(qfact(4), qfact(2) * qfact(1) * qfact(1))
        assert q_multinomial((2, 1, 1)) == expected


class TestIdentities:
    @pytest.mark.parametrize("t", range(11))
    def test_qbinomial_theorem(self, t):
        assert check_qbinomial_theorem(t)

    def test_prop41_small(self, q):
        assert prop41_sum(2, 1) == 1 + q
        assert prop41_sum(5, 0) == 1

    @pytest.mark.parametrize("n", range(11))
    def test_prop41(self, n):
        assert all(check_prop41(n, t) for t in range(n + 1))

    def test_prop41_range(self):
        with pytest.raises(RangeViolation):
            prop41_sum(2, 3)

    def test_negative_pochhammer_is_laurent(self, q):
        # (q^-2;q)_2 = (1 - q^-2)(1 - q^-1)
        assert qpoch(-2, 2) == (1 - q_power(-2)) * (1 - q_power(-1))
