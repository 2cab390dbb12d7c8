"""
F(a, w) と w₁ に関する部分分数分解モジュール

変数スロットは (x₁, …, xₙ, w₁, …, wₙ) の 2n 個。
F、A_k、B_ij をすべて FactorExpr で組み立て、有理点での正確な評価で分解を確かめる。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..laurent.polynomial import Monomial, RationalPoint
from ..qseries.pochhammer import PochSpec
from ..utils.config import Config, SamplingConfig
from ..utils.errors import DimensionMismatch, PoleAtPoint
from ..utils.logger import get_logger
from .factor_expr import FactorExpr
from .vectors import WeakComposition, as_weak_composition


def _mono(n: int, x: Optional[Dict[int, int]] = None, w: Optional[Dict[int, int]] = None) -> Monomial:
    """x_i, w_j の指数（1 始まり）から 2n 長の指数ベクトルを作る"""
    exps = [0] * (2 * n)
    for i, e in (x or {}).items():
        exps[i - 1] += e
    for j, e in (w or {}).items():
        exps[n + j - 1] += e
    return tuple(exps)


def _ratio(n: int, top: int, bottom: int) -> Monomial:
    return _mono(n, x={top: 1, bottom: -1})


def _pure(n: int) -> Monomial:
    return (0,) * (2 * n)


def _dyson_pair(n: int, a: WeakComposition, v: int, u: int) -> List[PochSpec]:
    """(x_v/x_u;q)_{a_v} (q x_u/x_v;q)_{a_u}"""
    return [
        PochSpec(_ratio(n, v, u), 0, a[v - 1]),
        PochSpec(_ratio(n, u, v), 1, a[u - 1]),
    ]


def _w_factor(n: int, a: WeakComposition, u: int, v: int) -> PochSpec:
    """(q^{-χ(u=v)} x_u/w_v;q)_{a_u+χ(u=v)}^{-1}"""
    chi = 1 if u == v else 0
    return PochSpec(_mono(n, x={u: 1}, w={v: -1}), -chi, a[u - 1] + chi, exponent=-1)


def _f_factors(n: int, a: WeakComposition, indices: Sequence[int]) -> List[PochSpec]:
    """添字集合 indices に制限した F の因子（Dyson 積と w の逆数因子）"""
    factors: List[PochSpec] = []
    for pos, v in enumerate(indices):
        for u in indices[pos + 1:]:
            factors.extend(_dyson_pair(n, a, v, u))
    for u in indices:
        for v in indices:
            factors.append(_w_factor(n, a, u, v))
    return factors


def f_expr(a: Sequence[int]) -> FactorExpr:
    """
    F(a, w) = ∏_{i<j}(x_i/x_j)_{a_i}(q x_j/x_i)_{a_j} · ∏_{i,j}(q^{-χ(j=i)} x_i/w_j)_{a_i+χ(j=i)}^{-1}
    """
    a = as_weak_composition(a)
    n = len(a)
    return FactorExpr(nvars=2 * n, factors=tuple(_f_factors(n, a, range(1, n + 1))))


def f_eval(a: Sequence[int], point: RationalPoint) -> Fraction:
    """
    F(a, w) の有理点での値

    Args:
        a: 弱組成
        point: (x₁…xₙ, w₁…wₙ) の 2n 座標

    Raises:
        PoleAtPoint: 点が極に当たる（別の点で再試行）
    """
    a = as_weak_composition(a)
    if point.dim != 2 * len(a):
        raise DimensionMismatch(f"点の次元は 2n = {2 * len(a)} です: {point.dim}")
    return f_expr(a).evaluate(point)


@dataclass(frozen=True)
class SplitTerms:
    """部分分数分解の分子 A_k と B_ij"""
    a_terms: Tuple[Tuple[int, FactorExpr], ...]
    b_terms: Tuple[Tuple[Tuple[int, int], FactorExpr], ...]


def _a_term(n: int, a: WeakComposition, k: int) -> FactorExpr:
    a1 = a[0]
    factors: List[PochSpec] = []
    for i in range(2, n + 1):
        factors.append(PochSpec(_ratio(n, 1, i), -a[i - 1], k + 1))
        factors.append(PochSpec(_ratio(n, 1, i), k + 1, a1 - k - 1))
        factors.append(PochSpec(_mono(n, x={1: 1}, w={i: -1}), 0, a1, exponent=-1))
    factors.append(PochSpec(_pure(n), -k - 1, k + 1, exponent=-1))
    factors.append(PochSpec(_pure(n), 1, a1 - k - 1, exponent=-1))
    # F(a^(1), w^(1)) を因子として展開しておく
    factors.extend(_f_factors(n, a, range(2, n + 1)))
    return FactorExpr(
        nvars=2 * n,
        qpow=(k + 1) * sum(a[1:]),
        factors=tuple(factors),
    )


def _b_term(n: int, a: WeakComposition, i: int, j: int) -> FactorExpr:
    a1 = a[0]
    ai = a[i - 1]
    qpow = (a1 + 1) * j + 1
    factors: List[PochSpec] = [
        PochSpec(_pure(n), -j, j, exponent=-1),
        PochSpec(_pure(n), 1, ai - j - 1, exponent=-1),
        PochSpec(_ratio(n, i, 1), 1 - a1, j),
        PochSpec(_ratio(n, i, 1), j + 2, ai - j - 1),
    ]
    for l in range(2, i):
        al = a[l - 1]
        qpow += j * al
        factors.append(PochSpec(_ratio(n, i, l), 1 - al, j))
        factors.append(PochSpec(_ratio(n, i, l), j + 1, ai - j))
    for l in range(i + 1, n + 1):
        al = a[l - 1]
        qpow += (j + 1) * al
        factors.append(PochSpec(_ratio(n, i, l), -al, j + 1))
        factors.append(PochSpec(_ratio(n, i, l), j + 1, ai - j - 1))
    others = [index for index in range(1, n + 1) if index != i]
    for pos, v in enumerate(others):
        for u in others[pos + 1:]:
            factors.extend(_dyson_pair(n, a, v, u))
    for u in range(1, n + 1):
        for v in range(2, n + 1):
            factors.append(_w_factor(n, a, u, v))
    return FactorExpr(
        nvars=2 * n,
        sign=-1,
        qpow=qpow,
        prefactor=_ratio(n, i, 1),
        factors=tuple(factors),
    )


def split_terms(a: Sequence[int]) -> SplitTerms:
    """
    F(a, w) の w₁ に関する部分分数分解の分子

    A_k（k = -1 … a₁-1）と B_ij（i ∈ I = {i >= 2 | a_i ≠ 0}, j = 0 … a_i-1）

    Returns:
        SplitTerms
    """
    a = as_weak_composition(a)
    n = len(a)
    if n == 0:
        raise DimensionMismatch("n >= 1 が必要です")
    a_terms = tuple((k, _a_term(n, a, k)) for k in range(-1, a[0]))
    b_terms = tuple(
        ((i, j), _b_term(n, a, i, j))
        for i in range(2, n + 1)
        if a[i - 1]
        for j in range(a[i - 1])
    )
    return SplitTerms(a_terms=a_terms, b_terms=b_terms)


def _simple_pole(point: RationalPoint, n: int, shift: int, var: int) -> Fraction:
    """1 / (1 - q^shift x_var / w₁)"""
    denominator = 1 - point.q ** shift * point.values[var - 1] / point.values[n]
    if denominator == 0:
        raise PoleAtPoint(f"1 - q^{shift} x{var}/w1 がこの点で 0 になります")
    return 1 / denominator


def splitting_rhs(a: Sequence[int], point: RationalPoint, terms: Optional[SplitTerms] = None) -> Fraction:
    """Σ_k A_k/(1 - q^k x₁/w₁) + Σ B_ij/(1 - q^j x_i/w₁) の値"""
    a = as_weak_composition(a)
    n = len(a)
    terms = terms or split_terms(a)
    total = Fraction(0)
    for k, expr in terms.a_terms:
        total += expr.evaluate(point) * _simple_pole(point, n, k, 1)
    for (i, j), expr in terms.b_terms:
        total += expr.evaluate(point) * _simple_pole(point, n, j, i)
    return total


def verify_splitting(a: Sequence[int], point: RationalPoint) -> bool:
    """
    部分分数分解が点 point で正確に成り立つか

    Raises:
        PoleAtPoint: どちらかの辺が点で定義されない
    """
    return f_eval(a, point) == splitting_rhs(a, point)


def sample_point(nslots: int, rng: np.random.Generator, sampling: Optional[SamplingConfig] = None) -> RationalPoint:
    """
    検証用の有理点を一つ作る

    q = p/s（q_min <= p, s <= q_max, p ≠ s）、各座標は相異なる素数
    """
    sampling = sampling or Config.get().sampling
    while True:
        p, s = (int(x) for x in rng.integers(sampling.q_min, sampling.q_max + 1, size=2))
        if p != s:
            break
    primes = rng.choice(np.array(sampling.prime_pool), size=nslots, replace=False)
    return RationalPoint(q=Fraction(p, s), values=tuple(Fraction(int(x)) for x in primes))


def verify_splitting_random(
    a: Sequence[int],
    rng: np.random.Generator,
    points: Optional[int] = None,
    sampling: Optional[SamplingConfig] = None,
) -> List[Tuple[RationalPoint, bool]]:
    """
    極を避けたランダムな有理点で分解を確かめる

    Args:
        a: 弱組成
        rng: シード済みの乱数生成器
        points: 点の数（省略時は設定値）
        sampling: サンプリング設定

    Returns:
        (点, 一致したか) のリスト

    Raises:
        PoleAtPoint: 再試行の上限を使い切った
    """
    logger = get_logger()
    a = as_weak_composition(a)
    sampling = sampling or Config.get().sampling
    points = points or sampling.points_per_case
    terms = split_terms(a)
    lhs_expr = f_expr(a)

    results: List[Tuple[RationalPoint, bool]] = []
    retries = 0
    while len(results) < points:
        point = sample_point(2 * len(a), rng, sampling)
        try:
            ok = lhs_expr.evaluate(point) == splitting_rhs(a, point, terms)
        except PoleAtPoint as e:
            retries += 1
            logger.debug(f"極に当たったため再サンプリング ({retries}/{sampling.pole_retry_budget}): {e}")
            if retries >= sampling.pole_retry_budget:
                raise PoleAtPoint(f"a = {a}: 再試行 {retries} 回でも極を避けられませんでした") from e
            continue
        results.append((point, ok))
    return results
