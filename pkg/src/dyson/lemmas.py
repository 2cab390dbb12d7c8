"""
q シフト階乗の書き換え恒等式

分母を払った形で、z の一変数ローラン多項式として正確に比べる。

    a : (z)_j (q/z)_i = q^{(k+1)i} (q^{-i}z)_{k+1} (q^{k+1}z)_{j-k-1} · (q^{-k}/z)_i         (-1 <= k <= j-1)
    b1: (1/z)_i (qz)_j = -q^{(i+1)k+1} z (q^{1-i}z)_k (q^{k+2}z)_{j-k-1} · (q^{-k-1}/z)_{i+1}  (j > 0, 0 <= k <= j-1)
    b2: (1/z)_i (qz)_j = q^{ik} (q^{1-i}z)_k (q^{k+1}z)_{j-k} · (q^{-k}/z)_i                  (0 <= k <= j)
"""

from typing import Iterator, Tuple

from ..exact.laurent import QLaurent
from ..laurent.polynomial import XPoly
from ..qseries.pochhammer import pochhammer
from ..utils.errors import RangeViolation


VARIANTS = ("a", "b1", "b2")


def _z(qexp: int) -> XPoly:
    return XPoly.monomial(1, (1,), QLaurent.monomial(qexp))


def _inv_z(qexp: int) -> XPoly:
    return XPoly.monomial(1, (-1,), QLaurent.monomial(qexp))


def lemma31_k_range(which: str, j: int) -> range:
    """変種ごとの k の範囲"""
    if which == "a":
        return range(-1, j)
    if which == "b1":
        return range(0, j) if j > 0 else range(0)
    if which == "b2":
        return range(0, j + 1)
    raise RangeViolation(f"未知の変種です: {which}")


def lemma31_sides(i: int, j: int, k: int, which: str) -> Tuple[XPoly, XPoly]:
    """
    交差乗算した両辺

    Raises:
        RangeViolation: (i, j, k) が変種の範囲外
    """
    if i < 0 or j < 0 or k not in lemma31_k_range(which, j):
        raise RangeViolation(f"範囲外です: which={which}, i={i}, j={j}, k={k}")

    if which == "a":
        lhs = pochhammer(_z(0), j) * pochhammer(_inv_z(1), i)
        rhs = (
            pochhammer(_z(-i), k + 1)
            * pochhammer(_z(k + 1), j - k - 1)
            * pochhammer(_inv_z(-k), i)
            * QLaurent.monomial((k + 1) * i)
        )
        return lhs, rhs

    lhs = pochhammer(_inv_z(0), i) * pochhammer(_z(1), j)
    if which == "b1":
        rhs = (
            _z((i + 1) * k + 1)
            * pochhammer(_z(1 - i), k)
            * pochhammer(_z(k + 2), j - k - 1)
            * pochhammer(_inv_z(-k - 1), i + 1)
        )
        return lhs, -rhs

    rhs = (
        pochhammer(_z(1 - i), k)
        * pochhammer(_z(k + 1), j - k)
        * pochhammer(_inv_z(-k), i)
        * QLaurent.monomial(i * k)
    )
    return lhs, rhs


def check_lemma31(i: int, j: int, k: int, which: str) -> bool:
    """書き換え恒等式が正確に成り立つか"""
    lhs, rhs = lemma31_sides(i, j, k, which)
    return lhs == rhs


def lemma31_cases(ij_max: int) -> Iterator[Tuple[str, int, int, int]]:
    """i, j <= ij_max の範囲内のすべての (変種, i, j, k)"""
    for which in VARIANTS:
        for i in range(ij_max + 1):
            for j in range(ij_max + 1):
                for k in lemma31_k_range(which, j):
                    yield which, i, j, k
