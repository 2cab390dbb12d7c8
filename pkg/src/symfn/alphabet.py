"""
アルファベットモジュール

q シフトされた変数 x_v·q^e の並びを作る
"""

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from ..exact.laurent import QLaurent
from ..laurent.polynomial import XPoly
from ..utils.errors import IndexOutOfRange, NegativePart


@dataclass(frozen=True)
class Letter:
    """文字 x_var · q^qexp（var は 1 始まり）"""
    var: int
    qexp: int = 0

    def to_xpoly(self, nvars: int) -> XPoly:
        if not 1 <= self.var <= nvars:
            raise IndexOutOfRange(f"変数番号 {self.var} が 1..{nvars} の範囲外です")
        return XPoly.variable(nvars, self.var - 1, QLaurent.monomial(self.qexp))

    def __str__(self) -> str:
        if self.qexp == 0:
            return f"x{self.var}"
        return f"x{self.var}*q^{self.qexp}"


@dataclass(frozen=True)
class Alphabet:
    """文字の順序付き並び（nvars は所属する環の変数数）"""
    nvars: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if not 1 <= letter.var <= self.nvars:
                raise IndexOutOfRange(f"変数番号 {letter.var} が 1..{self.nvars} の範囲外です")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __add__(self, other: "Alphabet") -> "Alphabet":
        """並びの連結（A ∪ B）"""
        return Alphabet(max(self.nvars, other.nvars), self.letters + other.letters)

    def __str__(self) -> str:
        return "(" + ", ".join(str(letter) for letter in self.letters) + ")"


def _check_composition(a: Sequence[int]) -> None:
    for part in a:
        if part < 0:
            raise NegativePart(f"弱組成に負の成分があります: {tuple(a)}")


def _block(var: int, length: int) -> Tuple[Letter, ...]:
    return tuple(Letter(var, t) for t in range(length))


def alphabet_plain(a: Sequence[int]) -> Alphabet:
    """
    x^(a) = (x₁, x₁q, …, x₁q^{a₁-1}, …, xₙ, …, xₙq^{aₙ-1})

    Args:
        a: 弱組成

    Returns:
        |a| 文字のアルファベット（a_i = 0 のブロックは空）
    """
    _check_composition(a)
    letters: Tuple[Letter, ...] = ()
    for var, part in enumerate(a, start=1):
        letters += _block(var, part)
    return Alphabet(len(a), letters)


def alphabet_augmented(i: int, a: Sequence[int]) -> Alphabet:
    """
    x_i^(a): x^(a) の i 番目のブロックの直前に x_i·q⁻¹ を加えたもの

    Args:
        i: 変数番号（1 始まり）
        a: 弱組成

    Returns:
        |a|+1 文字のアルファベット（a_i = 0 でも x_i·q⁻¹ は入る）
    """
    if not 1 <= i <= len(a):
        raise IndexOutOfRange(f"添字 {i} が 1..{len(a)} の範囲外です")
    _check_composition(a)
    letters: Tuple[Letter, ...] = ()
    for var, part in enumerate(a, start=1):
        if var == i:
            letters += (Letter(var, -1),)
        letters += _block(var, part)
    return Alphabet(len(a), letters)
