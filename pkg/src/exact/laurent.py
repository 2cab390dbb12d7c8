"""
q のローラン多項式モジュール

整数係数の一変数ローラン多項式 ℤ[q, q⁻¹] を扱う。
すべての定数項・閉形式の値はこの型で表す。
"""

from fractions import Fraction
from math import gcd
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from ..utils.errors import NonExactDivision, ZeroDenominator


# 机上規模の指数はこの範囲に収まる
EXPONENT_LIMIT = 2 ** 31

Scalar = Union[int, "QLaurent"]


def _check_exponent(exp: int) -> int:
    if not -EXPONENT_LIMIT < exp < EXPONENT_LIMIT:
        raise OverflowError(f"q の指数が範囲外です: {exp}")
    return exp


class QLaurent:
    """q のローラン多項式（不変オブジェクト）"""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        """
        Args:
            terms: 指数 → 係数 の対応（ゼロ係数は捨てる）
        """
        cleaned: Dict[int, int] = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    cleaned[_check_exponent(int(exp))] = int(coeff)
        self._terms = cleaned
        self._hash: Optional[int] = None

    # --- 生成 ---

    @classmethod
    def zero(cls) -> "QLaurent":
        return cls()

    @classmethod
    def one(cls) -> "QLaurent":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QLaurent":
        """coeff·q^exp"""
        return cls({exp: coeff})

    @classmethod
    def coerce(cls, value: Scalar) -> "QLaurent":
        """整数も受け付けて QLaurent に揃える"""
        if isinstance(value, QLaurent):
            return value
        if isinstance(value, int):
            return cls({0: value})
        raise TypeError(f"QLaurent に変換できません: {type(value).__name__}")

    @classmethod
    def _from_clean(cls, terms: Dict[int, int]) -> "QLaurent":
        # 呼び出し側でゼロ除去済みの辞書をそのまま使う
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # --- 参照 ---

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        """指数の昇順で (指数, 係数) を返す"""
        return iter(sorted(self._terms.items()))

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("ゼロ多項式に最低次数はありません")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("ゼロ多項式に最高次数はありません")
        return max(self._terms)

    @property
    def leading_coeff(self) -> int:
        return self._terms[self.max_exp]

    def content(self) -> int:
        """係数の最大公約数（ゼロなら 0）"""
        g = 0
        for coeff in self._terms.values():
            g = gcd(g, coeff)
        return g

    def at_one(self) -> int:
        """q = 1 を代入した値（係数和）"""
        return sum(self._terms.values())

    def evaluate(self, q: Union[int, Fraction]) -> Fraction:
        """有理数 q を代入した正確な値"""
        q = Fraction(q)
        if q == 0 and self._terms and self.min_exp < 0:
            raise ZeroDenominator("q = 0 で負べきを評価できません")
        return sum((Fraction(c) * q ** e for e, c in self._terms.items()), Fraction(0))

    # --- 演算 ---

    def __add__(self, other: Scalar) -> "QLaurent":
        try:
            other = QLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for exp, coeff in other._terms.items():
            value = acc.get(exp, 0) + coeff
            if value:
                acc[exp] = value
            else:
                acc.pop(exp, None)
        return QLaurent._from_clean(acc)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "QLaurent":
        try:
            other = QLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "QLaurent":
        return QLaurent.coerce(other) - self

    def __mul__(self, other: Scalar) -> "QLaurent":
        if isinstance(other, int):
            if other == 0:
                return QLaurent.zero()
            return QLaurent._from_clean({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, QLaurent):
            return NotImplemented
        if not self._terms or not other._terms:
            return QLaurent.zero()
        acc: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                acc[exp] = acc.get(exp, 0) + c1 * c2
        return QLaurent({e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "QLaurent":
        if power < 0:
            if not self.is_monomial():
                raise NonExactDivision("単項式以外の負べきは多項式になりません")
            (exp, coeff), = self._terms.items()
            if abs(coeff) != 1:
                raise NonExactDivision(f"係数 {coeff} は ℤ で可逆ではありません")
            return QLaurent.monomial(exp * power, coeff ** (-power))
        result = QLaurent.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, k: int) -> "QLaurent":
        """q^k を掛ける"""
        if k == 0:
            return self
        return QLaurent._from_clean({_check_exponent(e + k): c for e, c in self._terms.items()})

    def divexact(self, divisor: Scalar) -> "QLaurent":
        """
        ℤ[q, q⁻¹] での割り切れる除算

        Args:
            divisor: 除数（ゼロ以外）

        Returns:
            divisor · 商 = self となる商

        Raises:
            ZeroDenominator: 除数がゼロ
            NonExactDivision: 余りが残る
        """
        divisor = QLaurent.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDenominator("ゼロで割ることはできません")
        if self.is_zero():
            return QLaurent.zero()

        d_terms = divisor._terms
        d_max = max(d_terms)
        d_min = min(d_terms)
        d_lc = d_terms[d_max]
        d_span = d_max - d_min

        remainder = dict(self._terms)
        quotient: Dict[int, int] = {}
        while remainder:
            r_max = max(remainder)
            r_min = min(remainder)
            if r_max - r_min < d_span:
                raise NonExactDivision(f"({self}) は ({divisor}) で割り切れません")
            q_coeff, rest = divmod(remainder[r_max], d_lc)
            if rest:
                raise NonExactDivision(f"({self}) は ({divisor}) で割り切れません")
            q_exp = r_max - d_max
            quotient[q_exp] = q_coeff
            for exp, coeff in d_terms.items():
                key = exp + q_exp
                value = remainder.get(key, 0) - q_coeff * coeff
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return QLaurent(quotient)

    # --- 比較・表示 ---

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QLaurent.coerce(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        """
        正準文字列

        指数の昇順に "c*q^e" を並べ、係数 ±1 は符号のみ、負の項は " - " で繋ぐ。
        ゼロ多項式は "0"。
        """
        if not self._terms:
            return "0"
        pieces = []
        for index, (exp, coeff) in enumerate(self.items()):
            magnitude = abs(coeff)
            if exp == 0:
                body = str(magnitude)
            else:
                power = "q" if exp == 1 else f"q^{exp}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if index == 0:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"QLaurent({self})"


def q_power(exp: int) -> QLaurent:
    """q^exp"""
    return QLaurent.monomial(exp)


def ql_sum(values: Iterable[QLaurent]) -> QLaurent:
    """QLaurent の総和"""
    acc: Dict[int, int] = {}
    for value in values:
        for exp, coeff in value.terms.items():
            acc[exp] = acc.get(exp, 0) + coeff
    return QLaurent({e: c for e, c in acc.items() if c})


def ql_product(values: Iterable[QLaurent]) -> QLaurent:
    """QLaurent の総積"""
    result = QLaurent.one()
    for value in values:
        result = result * value
    return result
