"""
完全斉次対称関数モジュール

h_r をアルファベット上で一文字ずつの漸化式で計算する
"""

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import List

from ..laurent.polynomial import XPoly
from .alphabet import Alphabet


@lru_cache(maxsize=4096)
def hcomplete(r: int, alphabet: Alphabet) -> XPoly:
    """
    h_r(A)

    文字を一つずつ加えて h_d ← h_d + letter·h_{d-1}（d の昇順）で更新する。
    r < 0 なら 0、r = 0 なら 1。
    """
    nvars = alphabet.nvars
    if r < 0:
        return XPoly.zero(nvars)
    table: List[XPoly] = [XPoly.one(nvars)] + [XPoly.zero(nvars)] * r
    for letter in alphabet:
        term = letter.to_xpoly(nvars)
        for d in range(1, r + 1):
            table[d] = table[d] + term * table[d - 1]
    return table[r]


def hcomplete_bruteforce(r: int, alphabet: Alphabet) -> XPoly:
    """多重集合を列挙して h_r を求める（照合用）"""
    nvars = alphabet.nvars
    if r < 0:
        return XPoly.zero(nvars)
    polys = [letter.to_xpoly(nvars) for letter in alphabet]
    total = XPoly.zero(nvars)
    for chosen in combinations_with_replacement(range(len(polys)), r):
        term = XPoly.one(nvars)
        for index in chosen:
            term = term * polys[index]
        total = total + term
    return total
