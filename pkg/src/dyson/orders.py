"""
順序モジュール

⪯ 順序、支配順序、逆辞書式順序
"""

from typing import Sequence

from ..utils.errors import SizeMismatch
from .vectors import pad


def _common(u: Sequence[int], v: Sequence[int]):
    m = max(len(u), len(v))
    return pad(u, m), pad(v, m)


def prec_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """
    u ⪯ v

    u = v、または最初に異なる位置 i で u_i < v_i かつ j > i のすべてで u_j <= v_i。
    長さが違えばゼロ詰めして比べる。
    """
    u, v = _common(u, v)
    for i, (ui, vi) in enumerate(zip(u, v)):
        if ui != vi:
            return ui < vi and all(uj <= vi for uj in u[i + 1:])
    return True


def prec_less(u: Sequence[int], v: Sequence[int]) -> bool:
    """u ≺ v"""
    u, v = _common(u, v)
    return u != v and prec_leq(u, v)


def _check_size(lam: Sequence[int], mu: Sequence[int]) -> None:
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"サイズが異なります: |{tuple(lam)}| = {sum(lam)}, |{tuple(mu)}| = {sum(mu)}")


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """支配順序 λ <= μ（部分和がすべて μ 以下）"""
    _check_size(lam, mu)
    lam, mu = _common(lam, mu)
    left = right = 0
    for x, y in zip(lam, mu):
        left += x
        right += y
        if left > right:
            return False
    return True


def revlex_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """逆辞書式順序 λ <=^R μ"""
    _check_size(lam, mu)
    lam, mu = _common(lam, mu)
    for x, y in zip(lam, mu):
        if x != y:
            return x < y
    return True


def revlex_less(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """λ <^R μ"""
    _check_size(lam, mu)
    lam, mu = _common(lam, mu)
    return lam != mu and revlex_leq(lam, mu)
