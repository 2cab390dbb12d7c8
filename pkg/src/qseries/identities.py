"""
q 級数の恒等式チェック

q 二項定理と、q 二項係数の交代和表示を正確な計算で確かめる。
"""

from math import comb

from ..exact.fraction import QFraction
from ..exact.laurent import QLaurent
from ..laurent.polynomial import XPoly
from ..utils.errors import RangeViolation
from .binomial import qbinom
from .pochhammer import pochhammer, qfact, qpoch


def qbinomial_theorem_rhs(t: int) -> XPoly:
    """Σ_k q^{C(k,2)} [t k] (-z)^k（z は唯一の変数スロット）"""
    terms = {}
    for k in range(t + 1):
        terms[(k,)] = qbinom(t, k).shift(comb(k, 2)) * (-1) ** k
    return XPoly(1, terms)


def check_qbinomial_theorem(t: int) -> bool:
    """(z;q)_t = Σ_k q^{C(k,2)} [t k] (-z)^k が多項式として一致するか"""
    if t < 0:
        raise RangeViolation(f"t は非負である必要があります: {t}")
    z = XPoly.variable(1, 0)
    return pochhammer(z, t) == qbinomial_theorem_rhs(t)


def prop41_sum(n: int, t: int) -> QFraction:
    """
    Σ_{k=0}^{t} q^{k(n-t)} / ((q^{-k};q)_k (q;q)_{t-k}) を QFraction で計算する

    (q^{-k};q)_k は負べきを含むローラン多項式のまま扱う。
    """
    if not 0 <= t <= n:
        raise RangeViolation(f"0 <= t <= n が必要です: n={n}, t={t}")
    total = QFraction.normalize(0)
    for k in range(t + 1):
        total = total + QFraction.normalize(
            QLaurent.monomial(k * (n - t)),
            qpoch(-k, k) * qfact(t - k),
        )
    return total


def check_prop41(n: int, t: int) -> bool:
    """交代和が [n t] に一致するか"""
    return prop41_sum(n, t) == qbinom(n, t)
