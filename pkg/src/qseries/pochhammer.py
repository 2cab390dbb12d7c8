"""
q シフト階乗モジュール

(z;q)_k を多項式として展開する関数と、評価用の記号的な因子 PochSpec
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional

from ..exact.laurent import QLaurent
from ..laurent.polynomial import Monomial, RationalPoint, XPoly
from ..utils.errors import PoleAtPoint, RangeViolation


@dataclass(frozen=True)
class PochSpec:
    """
    記号的な q シフト階乗 (q^qshift · x^exps ; q)_length^exponent

    exponent = -1 のときは逆数の因子を表す。
    exps がすべて 0 なら純粋な q べき (q^qshift ; q)_length。
    """
    exps: Monomial
    qshift: int
    length: int
    exponent: int = 1

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(self.exps))
        if self.length < 0:
            raise RangeViolation(f"長さは非負である必要があります: {self.length}")
        if self.exponent not in (1, -1):
            raise RangeViolation(f"指数は ±1 のみです: {self.exponent}")

    @property
    def is_reciprocal(self) -> bool:
        return self.exponent == -1

    def base_value(self, point: RationalPoint) -> Fraction:
        """(arg;q)_length の値（指数を適用する前）"""
        arg = point.q ** self.qshift
        for base, exp in zip(point.values, self.exps):
            if exp:
                arg *= base ** exp
        value = Fraction(1)
        for t in range(self.length):
            value *= 1 - arg * point.q ** t
        return value

    def value(self, point: RationalPoint) -> Fraction:
        """
        有理点での値

        Raises:
            PoleAtPoint: 逆数因子がこの点で消える
        """
        value = self.base_value(point)
        if self.is_reciprocal:
            if value == 0:
                raise PoleAtPoint(f"{self.render()} がこの点で 0 になります")
            return 1 / value
        return value

    def expand(self) -> XPoly:
        """正の指数の因子を XPoly に展開する"""
        if self.is_reciprocal:
            raise RangeViolation("逆数因子は多項式に展開できません")
        nvars = len(self.exps)
        return pochhammer(XPoly.monomial(nvars, self.exps, QLaurent.monomial(self.qshift)), self.length)

    def render(self, names: Optional[List[str]] = None) -> str:
        names = names or [f"x{i + 1}" for i in range(len(self.exps))]
        parts = [] if self.qshift == 0 else [f"q^{self.qshift}"]
        for name, exp in zip(names, self.exps):
            if exp == 1:
                parts.append(name)
            elif exp:
                parts.append(f"{name}^{exp}")
        arg = "*".join(parts) or "1"
        suffix = "^-1" if self.is_reciprocal else ""
        return f"({arg};q)_{self.length}{suffix}"


def pochhammer(arg: XPoly, k: int) -> XPoly:
    """
    (arg;q)_k = ∏_{t=0}^{k-1} (1 - q^t·arg) を展開する

    Args:
        arg: 単項式（q べき係数つき）
        k: 長さ（0 なら 1）

    Returns:
        展開された XPoly

    Raises:
        NotAMonomial: arg が単項式でない
    """
    if k < 0:
        raise RangeViolation(f"長さは非負である必要があります: {k}")
    arg.single_term()
    one = XPoly.one(arg.nvars)
    result = one
    for t in range(k):
        result = result * (one - arg * QLaurent.monomial(t))
    return result


@lru_cache(maxsize=None)
def qpoch(qshift: int, k: int) -> QLaurent:
    """(q^qshift ; q)_k を QLaurent で返す"""
    if k < 0:
        raise RangeViolation(f"長さは非負である必要があります: {k}")
    result = QLaurent.one()
    for t in range(k):
        result = result * (1 - QLaurent.monomial(qshift + t))
    return result


def qfact(k: int) -> QLaurent:
    """(q;q)_k"""
    return qpoch(1, k)
