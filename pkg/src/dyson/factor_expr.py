"""
記号的な積の表現モジュール

符号 · q べき · 単項式 · ∏(arg;q)_len^{±1} の形の式を保持し、有理点で評価する
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..laurent.polynomial import Monomial, RationalPoint
from ..qseries.pochhammer import PochSpec
from ..utils.errors import DimensionMismatch, RangeViolation


@dataclass(frozen=True)
class FactorExpr:
    """sign · q^qpow · x^prefactor · ∏ factors"""
    nvars: int
    sign: int = 1
    qpow: int = 0
    prefactor: Monomial = ()
    factors: Tuple[PochSpec, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise RangeViolation(f"符号は ±1 です: {self.sign}")
        prefactor = tuple(self.prefactor) or (0,) * self.nvars
        if len(prefactor) != self.nvars:
            raise DimensionMismatch(f"前因子の長さ {len(prefactor)} が変数数 {self.nvars} と異なります")
        object.__setattr__(self, "prefactor", prefactor)
        factors = tuple(self.factors)
        for spec in factors:
            if len(spec.exps) != self.nvars:
                raise DimensionMismatch(f"因子 {spec.render()} の次元が {self.nvars} と異なります")
        object.__setattr__(self, "factors", factors)

    def __mul__(self, other: "FactorExpr") -> "FactorExpr":
        if self.nvars != other.nvars:
            raise DimensionMismatch(f"変数数が異なります: {self.nvars} と {other.nvars}")
        return FactorExpr(
            nvars=self.nvars,
            sign=self.sign * other.sign,
            qpow=self.qpow + other.qpow,
            prefactor=tuple(x + y for x, y in zip(self.prefactor, other.prefactor)),
            factors=self.factors + other.factors,
        )

    def evaluate(self, point: RationalPoint) -> Fraction:
        """
        有理点での値

        Raises:
            PoleAtPoint: 逆数因子がこの点で消える
        """
        if point.dim != self.nvars:
            raise DimensionMismatch(f"点の次元 {point.dim} が変数数 {self.nvars} と異なります")
        value = Fraction(self.sign) * point.q ** self.qpow
        for base, exp in zip(point.values, self.prefactor):
            if exp:
                value *= base ** exp
        for spec in self.factors:
            value *= spec.value(point)
        return value

    def factor_values(self, point: RationalPoint) -> List[Fraction]:
        """各 Pochhammer 因子の値（指数適用後）"""
        return [spec.value(point) for spec in self.factors]

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        names = list(names) if names else [f"x{i + 1}" for i in range(self.nvars)]
        head = "-" if self.sign < 0 else ""
        parts = [f"q^{self.qpow}"] if self.qpow else []
        for name, exp in zip(names, self.prefactor):
            if exp == 1:
                parts.append(name)
            elif exp:
                parts.append(f"{name}^{exp}")
        parts.extend(spec.render(names) for spec in self.factors if spec.length)
        return head + ("*".join(parts) or "1")
