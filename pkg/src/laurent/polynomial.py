"""
多変数ローラン多項式モジュール

変数 x₁…xₘ（必要なら w も追加のスロットとして扱う）の疎なローラン多項式。
係数は QLaurent。係数抽出と有理点での正確な評価を提供する。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from ..exact.laurent import QLaurent
from ..utils.errors import DimensionMismatch, NotAMonomial, RingMismatch, ZeroDenominator


Monomial = Tuple[int, ...]
Coefficient = Union[int, QLaurent]


@dataclass(frozen=True)
class RationalPoint:
    """有理点（q と各変数スロットの値）"""
    q: Fraction
    values: Tuple[Fraction, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if self.q == 0:
            raise ZeroDenominator("q = 0 の点は使えません")
        if any(v == 0 for v in self.values):
            raise ZeroDenominator("ローラン多項式の評価には非ゼロの座標が必要です")

    @property
    def dim(self) -> int:
        return len(self.values)

    def to_dict(self) -> Dict[str, object]:
        """レポート用（有理数は文字列）"""
        return {"q": str(self.q), "values": [str(v) for v in self.values]}


class XPoly:
    """x のローラン多項式（係数は q のローラン多項式、不変オブジェクト）"""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Monomial, Coefficient]] = None):
        """
        Args:
            nvars: 変数スロット数
            terms: 単項式（指数ベクトル） → 係数
        """
        self.nvars = nvars
        cleaned: Dict[Monomial, QLaurent] = {}
        if terms:
            for mono, coeff in terms.items():
                mono = tuple(int(e) for e in mono)
                if len(mono) != nvars:
                    raise DimensionMismatch(f"単項式の長さ {len(mono)} が変数数 {nvars} と異なります")
                coeff = QLaurent.coerce(coeff)
                if not coeff.is_zero():
                    cleaned[mono] = coeff
        self._terms = cleaned

    # --- 生成 ---

    @classmethod
    def zero(cls, nvars: int) -> "XPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, coeff: Coefficient = 1) -> "XPoly":
        return cls(nvars, {(0,) * nvars: coeff})

    @classmethod
    def one(cls, nvars: int) -> "XPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff: Coefficient = 1) -> "XPoly":
        """coeff · x^exps"""
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars: int, index: int, coeff: Coefficient = 1) -> "XPoly":
        """coeff · x_index（index は 0 始まり）"""
        exps = [0] * nvars
        exps[index] = 1
        return cls.monomial(nvars, exps, coeff)

    @classmethod
    def ratio(cls, nvars: int, num: int, den: int, qexp: int = 0) -> "XPoly":
        """q^qexp · x_num / x_den（0 始まり添字）"""
        exps = [0] * nvars
        exps[num] += 1
        exps[den] -= 1
        return cls.monomial(nvars, exps, QLaurent.monomial(qexp))

    # --- 参照 ---

    @property
    def terms(self) -> Mapping[Monomial, QLaurent]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, QLaurent]]:
        """単項式の辞書式順で項を返す"""
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def single_term(self) -> Tuple[Monomial, QLaurent]:
        """
        唯一の項を返す

        Raises:
            NotAMonomial: 項数が 1 でない
        """
        if len(self._terms) != 1:
            raise NotAMonomial(f"単項式ではありません（{len(self._terms)} 項）")
        (mono, coeff), = self._terms.items()
        return mono, coeff

    def coeff_of(self, v: Sequence[int]) -> QLaurent:
        """
        x^v の係数を取り出す

        Args:
            v: 指数ベクトル（長さは変数スロット数）

        Returns:
            係数（存在しなければゼロ多項式）
        """
        v = tuple(v)
        if len(v) != self.nvars:
            raise DimensionMismatch(f"指数ベクトルの長さ {len(v)} が変数数 {self.nvars} と異なります")
        return self._terms.get(v, QLaurent.zero())

    def constant_term(self) -> QLaurent:
        """CT_x"""
        return self.coeff_of((0,) * self.nvars)

    def degrees(self) -> Iterable[int]:
        """各項の全次数"""
        return (sum(mono) for mono in self._terms)

    def is_homogeneous(self, degree: int) -> bool:
        return all(d == degree for d in self.degrees())

    def eval_at(self, point: RationalPoint) -> Fraction:
        """
        有理点で評価する

        Args:
            point: q と各スロットの値

        Returns:
            正確な有理数値
        """
        if point.dim != self.nvars:
            raise DimensionMismatch(f"点の次元 {point.dim} が変数数 {self.nvars} と異なります")
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            value = coeff.evaluate(point.q)
            for base, exp in zip(point.values, mono):
                if exp:
                    value *= base ** exp
            total += value
        return total

    # --- 演算 ---

    def _check_ring(self, other: "XPoly") -> None:
        if self.nvars != other.nvars:
            raise RingMismatch(f"変数数が異なります: {self.nvars} と {other.nvars}")

    def _coerce(self, other: Union[Coefficient, "XPoly"]) -> "XPoly":
        if isinstance(other, XPoly):
            self._check_ring(other)
            return other
        return XPoly.constant(self.nvars, other)

    def __add__(self, other: Union[Coefficient, "XPoly"]) -> "XPoly":
        other = self._coerce(other)
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            value = acc[mono] + coeff if mono in acc else coeff
            if value.is_zero():
                acc.pop(mono, None)
            else:
                acc[mono] = value
        return XPoly(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Union[Coefficient, "XPoly"]) -> "XPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Coefficient) -> "XPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Union[Coefficient, "XPoly"]) -> "XPoly":
        if not isinstance(other, XPoly):
            scalar = QLaurent.coerce(other)
            return XPoly(self.nvars, {m: c * scalar for m, c in self._terms.items()})
        self._check_ring(other)
        if not self._terms or not other._terms:
            return XPoly.zero(self.nvars)

        # (単項式) → (q 指数 → 整数) で累積し、最後にゼロを落とす
        acc: Dict[Monomial, Dict[int, int]] = {}
        right = [(m, list(c.terms.items())) for m, c in other._terms.items()]
        for m1, c1 in self._terms.items():
            left = list(c1.terms.items())
            for m2, c2 in right:
                mono = tuple(a + b for a, b in zip(m1, m2))
                slot = acc.get(mono)
                if slot is None:
                    slot = acc[mono] = {}
                for e1, k1 in left:
                    for e2, k2 in c2:
                        exp = e1 + e2
                        slot[exp] = slot.get(exp, 0) + k1 * k2
        return XPoly(self.nvars, {m: QLaurent(slot) for m, slot in acc.items()})

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "XPoly":
        if power < 0:
            mono, coeff = self.single_term()
            inverse = coeff ** -1
            return XPoly.monomial(self.nvars, [-e * -power for e in mono], inverse ** -power)
        result = XPoly.one(self.nvars)
        for _ in range(power):
            result = result * self
        return result

    # --- 比較・表示 ---

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, QLaurent)):
            other = XPoly.constant(self.nvars, other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def render(self, names: Optional[List[str]] = None) -> str:
        """変数名を指定して文字列化する"""
        if not self._terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        pieces = []
        for mono, coeff in self.items():
            factors = []
            for name, exp in zip(names, mono):
                if exp == 1:
                    factors.append(name)
                elif exp:
                    factors.append(f"{name}^{exp}")
            monomial = "*".join(factors)
            if not monomial:
                pieces.append(f"({coeff})")
            elif coeff == 1:
                pieces.append(monomial)
            else:
                pieces.append(f"({coeff})*{monomial}")
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"XPoly[{self.nvars}]({self})"
