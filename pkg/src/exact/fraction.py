"""
q の有理関数モジュール

QLaurent の分数を正規形で保持する。
最大公約数は sympy の一変数多項式 gcd に任せる。
"""

from fractions import Fraction
from typing import Union

import sympy

from ..utils.errors import NonExactDivision, ZeroDenominator
from .laurent import QLaurent


_Q = sympy.Symbol("q")

Operand = Union[int, QLaurent, "QFraction"]


def _to_poly(value: QLaurent) -> sympy.Poly:
    # 呼び出し側で最低次数 0 に揃えてある
    return sympy.Poly.from_dict({(exp,): coeff for exp, coeff in value.terms.items()}, _Q, domain="ZZ")


def _from_poly(poly: sympy.Poly) -> QLaurent:
    return QLaurent({monom[0]: int(coeff) for monom, coeff in poly.as_dict().items()})


def _polynomial_gcd(a: QLaurent, b: QLaurent) -> QLaurent:
    """最低次数 0 の二つの多項式の gcd（整数内容も含む）"""
    return _from_poly(_to_poly(a).gcd(_to_poly(b)))


class QFraction:
    """
    q の有理関数 num/den

    不変条件:
        - den は最低次数 0、最高次係数が正
        - q べきの内容は num 側に寄せる
        - num と den の ℚ 上の gcd は単元
    """

    __slots__ = ("num", "den")

    def __init__(self, num: QLaurent, den: QLaurent):
        # 正規化済みの値を直接受け取る。通常は normalize() を使う
        self.num = num
        self.den = den

    @classmethod
    def normalize(cls, num: Operand, den: Operand = 1) -> "QFraction":
        """
        分数を正規形にする

        Args:
            num: 分子
            den: 分母

        Returns:
            値を変えずに不変条件を満たした QFraction

        Raises:
            ZeroDenominator: 分母がゼロ
        """
        num = QLaurent.coerce(num)
        den = QLaurent.coerce(den)
        if den.is_zero():
            raise ZeroDenominator("分母がゼロです")
        if num.is_zero():
            return cls(QLaurent.zero(), QLaurent.one())

        # 分母の q べきを分子へ移す
        den_shift = den.min_exp
        den = den.shift(-den_shift)
        num = num.shift(-den_shift)

        num_shift = num.min_exp
        num_poly = num.shift(-num_shift)
        g = _polynomial_gcd(num_poly, den)
        if g != 1:
            num = num_poly.divexact(g).shift(num_shift)
            den = den.divexact(g)

        if den.leading_coeff < 0:
            num, den = -num, -den
        return cls(num, den)

    @classmethod
    def coerce(cls, value: Operand) -> "QFraction":
        if isinstance(value, QFraction):
            return value
        return cls.normalize(value)

    # --- 演算 ---

    def __add__(self, other: Operand) -> "QFraction":
        other = QFraction.coerce(other)
        return QFraction.normalize(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "QFraction":
        return QFraction(-self.num, self.den)

    def __sub__(self, other: Operand) -> "QFraction":
        return self + (-QFraction.coerce(other))

    def __rsub__(self, other: Operand) -> "QFraction":
        return QFraction.coerce(other) - self

    def __mul__(self, other: Operand) -> "QFraction":
        other = QFraction.coerce(other)
        return QFraction.normalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> "QFraction":
        other = QFraction.coerce(other)
        if other.num.is_zero():
            raise ZeroDenominator("ゼロの有理関数で割ることはできません")
        return QFraction.normalize(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: Operand) -> "QFraction":
        return QFraction.coerce(other) / self

    # --- 変換・比較 ---

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == 1

    def to_laurent(self) -> QLaurent:
        """
        ローラン多項式へ変換する

        Raises:
            NonExactDivision: 分母が単元でない
        """
        if self.den == 1:
            return self.num
        return self.num.divexact(self.den)

    def evaluate(self, q: Union[int, Fraction]) -> Fraction:
        """有理数 q での値"""
        den_value = self.den.evaluate(q)
        if den_value == 0:
            raise ZeroDenominator(f"q = {q} は分母の根です")
        return self.num.evaluate(q) / den_value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, QLaurent)):
            other = QFraction.coerce(other)
        if not isinstance(other, QFraction):
            return NotImplemented
        # 交差乗算で比較する
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"QFraction({self})"
