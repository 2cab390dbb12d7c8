"""
q 二項係数モジュール

ガウスの二項係数をパスカル漸化式で除算なしに計算する。
"""

from functools import lru_cache
from typing import Sequence

from ..exact.laurent import QLaurent
from .pochhammer import qpoch


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> QLaurent:
    """
    [n k]_q

    [n k] = [n-1 k-1] + q^k [n-1 k] で計算する（k > n や負の引数は 0）
    """
    if k < 0 or n < 0 or k > n:
        return QLaurent.zero()
    if k == 0 or k == n:
        return QLaurent.one()
    return qbinom(n - 1, k - 1) + qbinom(n - 1, k).shift(k)


def qbinom_quotient(n: int, k: int) -> QLaurent:
    """定義式 (q^{n-k+1};q)_k / (q;q)_k による計算（照合用）"""
    if k < 0 or n < 0 or k > n:
        return QLaurent.zero()
    return qpoch(n - k + 1, k).divexact(qpoch(1, k))


def q_multinomial(a: Sequence[int]) -> QLaurent:
    """(q;q)_{|a|} / ∏(q;q)_{a_i} を ∏ [a_i+…+a_n  a_i] として計算する"""
    result = QLaurent.one()
    tail = 0
    for part in reversed(a):
        tail += part
        result = result * qbinom(tail, part)
    return result
