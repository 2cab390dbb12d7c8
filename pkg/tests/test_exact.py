"""
QLaurent と QFraction のテスト
"""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.exact import QFraction, QLaurent, q_power, ql_product, ql_sum
from src.utils.errors import NonExactDivision, ZeroDenominator


laurents = st.dictionaries(
    st.integers(min_value=-4, max_value=4),
    st.integers(min_value=-9, max_value=9),
    max_size=5,
).map(QLaurent)

nonzero_laurents = laurents.filter(lambda p: not p.is_zero())

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(lambda x: x != 0)


def L(*pairs):
    """(指数, 係数) の組から QLaurent を作る"""
    return QLaurent(dict(pairs))


class TestQLaurentExamples:
    def test_add(self, q):
        assert q + (-q) == 0
        assert (1 + q) + q == L((0, 1), (1, 2))
        assert q_power(-1) + (1 + q) == L((-1, 1), (0, 1), (1, 1))

    def test_mul(self, q):
        assert (1 - q) * (1 + q) == L((0, 1), (2, -1))
        assert (1 + q) * QLaurent.zero() == 0
        assert q_power(-1) * q == 1

    def test_divexact(self, q):
        assert (1 - q ** 2).divexact(1 - q) == 1 + q
        assert (q + q ** 2).divexact(q) == 1 + q
        numerator = (1 - q ** 3) * (1 - q ** 4)
        denominator = (1 - q) * (1 - q ** 2)
        assert numerator.divexact(denominator) == L((0, 1), (1, 1), (2, 2), (3, 1), (4, 1))

    def test_divexact_failures(self, q):
        with pytest.raises(NonExactDivision):
            (1 + q ** 2).divexact(1 + q)
        with pytest.raises(NonExactDivision):
            QLaurent.one().divexact(2)
        with pytest.raises(ZeroDenominator):
            q.divexact(0)

    def test_negative_power(self, q):
        assert q ** -2 == q_power(-2)
        assert (-q) ** -1 == -q_power(-1)
        with pytest.raises(NonExactDivision):
            (1 + q) ** -1
        with pytest.raises(NonExactDivision):
            (2 * q) ** -1

    def test_exponent_limit(self):
        with pytest.raises(OverflowError):
            QLaurent.monomial(2 ** 31)

    def test_canonical_string(self, q):
        assert str(QLaurent.zero()) == "0"
        assert str(1 - q ** 2) == "1 - q^2"
        assert str(q_power(-1) + 1 + q) == "q^-1 + 1 + q"
        value = q_power(-2) * (1 + q + q ** 2) * (1 + q)
        assert str(value) == "q^-2 + 2*q^-1 + 2 + q"
        assert str(-3 * q_power(2) + q_power(-1)) == "q^-1 - 3*q^2"

    def test_accessors(self, q):
        p = q_power(-1) * 2 + 3 * q ** 4
        assert p.min_exp == -1
        assert p.max_exp == 4
        assert p.leading_coeff == 3
        assert p.coefficient(4) == 3
        assert p.coefficient(2) == 0
        assert p.at_one() == 5
        assert list(p.items()) == [(-1, 2), (4, 3)]
        assert (4 + 6 * q).content() == 2

    def test_evaluate(self, q):
        assert (1 + q).evaluate(Fraction(1, 2)) == Fraction(3, 2)
        assert (q_power(-2) + q).evaluate(2) == Fraction(9, 4)

    def test_sum_and_product(self, q):
        assert ql_sum([q, q, 1]) == 1 + 2 * q
        assert ql_product([1 - q, 1 + q, q]) == q - q ** 3
        assert ql_product([]) == 1


class TestQLaurentProperties:
    @settings(max_examples=1000)
    @given(laurents, laurents, laurents)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == 0

    @settings(max_examples=300)
    @given(laurents, nonzero_laurents)
    def test_divexact_inverts_mul(self, a, b):
        assert (a * b).divexact(b) == a

    @given(laurents, rationals)
    def test_evaluate_is_homomorphism(self, a, x):
        b = a * a + 1
        assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
        assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


class TestQFraction:
    def test_normalize_examples(self, q):
        f = QFraction.normalize(q, q ** 2)
        assert f.num == q_power(-1)
        assert f.den == 1

        g = QFraction.normalize(1 - q ** 2, 1 - q)
        assert g.num == 1 + q
        assert g.den == 1

        h = QFraction.normalize(1, 1 - q)
        assert h.den.min_exp == 0
        assert h.den.leading_coeff > 0
        assert h * (1 - q) == 1

    def test_zero_denominator(self, q):
        with pytest.raises(ZeroDenominator):
            QFraction.normalize(q, 0)
        with pytest.raises(ZeroDenominator):
            QFraction.normalize(1) / QFraction.normalize(0)

    def test_zero_numerator(self, q):
        f = QFraction.normalize(0, 1 + q)
        assert f.is_zero()
        assert f.den == 1

    def test_arithmetic(self, q):
        # 1/(1-q) + q/(1-q^-1) = 1 + q
        total = QFraction.normalize(1, 1 - q) + QFraction.normalize(q, 1 - q_power(-1))
        assert total == 1 + q
        assert total.is_laurent()
        assert total.to_laurent() == 1 + q

    def test_to_laurent_failure(self, q):
        with pytest.raises(NonExactDivision):
            QFraction.normalize(1, 1 - q).to_laurent()

    def test_evaluate(self, q):
        f = QFraction.normalize(1 + q, 1 - q)
        assert f.evaluate(Fraction(1, 2)) == 3
        with pytest.raises(ZeroDenominator):
            f.evaluate(1)

    def test_str(self, q):
        assert str(QFraction.normalize(1 - q ** 2, 1 - q)) == "1 + q"

    @settings(max_examples=200)
    @given(laurents, nonzero_laurents, nonzero_laurents)
    def test_equality_is_scale_invariant(self, num, den, scale):
        assert QFraction.normalize(num, den) == QFraction.normalize(num * scale, den * scale)

    @settings(max_examples=200)
    @given(laurents, nonzero_laurents, laurents, nonzero_laurents, st.lists(rationals, min_size=5, max_size=5))
    def test_equality_agrees_with_evaluation(self, n1, d1, n2, d2, points):
        f = QFraction.normalize(n1, d1)
        g = QFraction.normalize(n2, d2)
        points = [x for x in points if d1.evaluate(x) != 0 and d2.evaluate(x) != 0]
        assume(points)
        if f == g:
            assert all(f.evaluate(x) == g.evaluate(x) for x in points)
        elif any(f.evaluate(x) != g.evaluate(x) for x in points):
            assert f != g

    @settings(max_examples=200)
    @given(laurents, nonzero_laurents, rationals)
    def test_normalize_keeps_value(self, num, den, x):
        assume(den.evaluate(x) != 0)
        f = QFraction.normalize(num, den)
        assume(f.den.evaluate(x) != 0)
        assert f.evaluate(x) == num.evaluate(x) / den.evaluate(x)
