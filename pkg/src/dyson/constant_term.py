"""
一般化 q-Dyson 定数項モジュール

D と D̃ を定義どおり全展開して係数抽出で求める（これが基準値）。
積公式・Kadell の公式・漸化式はこの値と照合される側。
"""

from functools import lru_cache
from typing import Sequence, Tuple

from ..exact.fraction import QFraction
from ..exact.laurent import QLaurent, q_power
from ..laurent.polynomial import XPoly
from ..qseries.binomial import q_multinomial, qbinom
from ..qseries.pochhammer import pochhammer, qpoch
from ..symfn.alphabet import alphabet_augmented, alphabet_plain
from ..symfn.complete import hcomplete
from ..utils.errors import BadShape, DimensionMismatch
from .vectors import (
    IntVector,
    Partition,
    WeakComposition,
    as_partition,
    as_weak_composition,
    pad,
    strip_zeros,
)


@lru_cache(maxsize=64)
def _dyson_product(a: WeakComposition) -> XPoly:
    n = len(a)
    result = XPoly.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            result = result * pochhammer(XPoly.ratio(n, i, j), a[i])
            result = result * pochhammer(XPoly.ratio(n, j, i, qexp=1), a[j])
    return result


def dyson_product(a: Sequence[int]) -> XPoly:
    """∏_{i<j} (x_i/x_j;q)_{a_i} (q x_j/x_i;q)_{a_j} を全展開する"""
    return _dyson_product(as_weak_composition(a))


def qdyson_rhs(a: Sequence[int]) -> QLaurent:
    """q 多項係数 (q;q)_{|a|} / ∏(q;q)_{a_i}"""
    return q_multinomial(as_weak_composition(a))


def _normalize_d(v: Sequence[int], lam: Sequence[int], a: Sequence[int]) -> Tuple[IntVector, Partition, WeakComposition]:
    a = as_weak_composition(a)
    n = len(a)
    lam = as_partition(lam)
    if len(strip_zeros(lam)) > n:
        raise DimensionMismatch(f"D では λ の長さは n = {n} 以下です: {lam}")
    return pad(v, n), pad(lam, n), a


def _normalize_dt(v: Sequence[int], lam: Sequence[int], a: Sequence[int]) -> Tuple[IntVector, Partition, WeakComposition]:
    a = as_weak_composition(a)
    return pad(v, len(a)), strip_zeros(as_partition(lam)), a


@lru_cache(maxsize=256)
def _d_integrand(lam: Partition, a: WeakComposition) -> XPoly:
    result = _dyson_product(a)
    for i, part in enumerate(lam, start=1):
        if part:
            result = hcomplete(part, alphabet_augmented(i, a)) * result
    return result


@lru_cache(maxsize=256)
def _dt_integrand(lam: Partition, a: WeakComposition) -> XPoly:
    alphabet = alphabet_plain(a)
    result = _dyson_product(a)
    for part in lam:
        result = hcomplete(part, alphabet) * result
    return result


def d_integrand(lam: Sequence[int], a: Sequence[int]) -> XPoly:
    """∏ h_{λ_i}(x_i^(a)) · (Dyson 積)"""
    _, lam, a = _normalize_d((), lam, a)
    return _d_integrand(lam, a)


def dt_integrand(lam: Sequence[int], a: Sequence[int]) -> XPoly:
    """h_λ(x^(a)) · (Dyson 積)"""
    _, lam, a = _normalize_dt((), lam, a)
    return _dt_integrand(lam, a)


def d_brute(v: Sequence[int], lam: Sequence[int], a: Sequence[int]) -> QLaurent:
    """
    D_{v,λ}(a) = CT_x x^{-v} ∏ h_{λ_i}(x_i^(a)) · (Dyson 積)

    Args:
        v: 整数ベクトル（短ければゼロ詰め）
        lam: 分割（長さ n 以下）
        a: 弱組成

    Returns:
        全展開した多項式の x^v の係数（|v| ≠ |λ| なら 0）
    """
    v, lam, a = _normalize_d(v, lam, a)
    if sum(v) != sum(lam):
        return QLaurent.zero()
    return _d_integrand(lam, a).coeff_of(v)


def dt_brute(v: Sequence[int], lam: Sequence[int], a: Sequence[int]) -> QLaurent:
    """
    D̃_{v,λ}(a) = CT_x x^{-v} h_λ(x^(a)) · (Dyson 積)

    λ のパート数に制限はない（全パートが同じアルファベット x^(a) を使う）。
    """
    v, lam, a = _normalize_dt(v, lam, a)
    if sum(v) != sum(lam):
        return QLaurent.zero()
    return _dt_integrand(lam, a).coeff_of(v)


def d_closed(lam: Sequence[int], a: Sequence[int]) -> QLaurent:
    """q^{-|λ|} ∏ [a_i+…+a_n+λ_i  a_i]"""
    _, lam, a = _normalize_d((), lam, a)
    result = q_power(-sum(lam))
    for i in range(len(a)):
        result = result * qbinom(sum(a[i:]) + lam[i], a[i])
    return result


def dt_kadell(v: Sequence[int], r: int, a: Sequence[int]) -> QLaurent:
    """
    Kadell の公式による D̃_{v,(r)}(a)

    v = (0^{k-1}, r, 0^{n-k}) のとき
    q^{Σ_{i>k} a_i} (1-q^{a_k}) (q^{|a|+1};q)_{r-1} / (q^{|a|-a_k+1};q)_r · ∏[a_i+…+a_n  a_i]、
    それ以外は 0。QFraction で組み立ててから割り切り除算で QLaurent に戻す。

    Raises:
        BadShape: r が正でない、v が弱組成でない、|v| ≠ r
        NonExactDivision: 結果が多項式にならない（公式の反例）
    """
    a = as_weak_composition(a)
    n = len(a)
    if r <= 0:
        raise BadShape(f"r は正の整数です: {r}")
    v = pad(v, n)
    if any(part < 0 for part in v) or sum(v) != r:
        raise BadShape(f"v は |v| = {r} の弱組成である必要があります: {v}")

    support = [index for index, part in enumerate(v) if part]
    if len(support) != 1:
        return QLaurent.zero()
    k = support[0]
    size = sum(a)
    numerator = (1 - q_power(a[k])).shift(sum(a[k + 1:])) * qpoch(size + 1, r - 1)
    if numerator.is_zero():
        return QLaurent.zero()
    value = QFraction.normalize(numerator, qpoch(size - a[k] + 1, r)) * q_multinomial(a)
    return value.to_laurent()


def d_recursive(v: Sequence[int], lam: Sequence[int], a: Sequence[int]) -> QLaurent:
    """
    漸化式による D_{v,λ}(a)

    λ₁ >= max(v) の間:
        λ₁ = v₁ なら q^{-λ₁} [|a|+λ₁  a₁] を掛けて先頭を取り除く
        λ₁ > v₁ なら 0
    条件が崩れたら残りを d_brute で求める。空の場合は 1。
    """
    v, lam, a = _normalize_d(v, lam, a)
    result = QLaurent.one()
    while a:
        if lam[0] < max(v):
            return result * d_brute(v, lam, a)
        if lam[0] > v[0]:
            return QLaurent.zero()
        result = result * qbinom(sum(a) + lam[0], a[0]).shift(-lam[0])
        v, lam, a = v[1:], lam[1:], a[1:]
    return result


def expansion_relation_11(a: Sequence[int]) -> Tuple[QLaurent, QLaurent]:
    """
    D_{(1,1),(1,1)}(a) と
    D̃_{(1,1),(1,1)} + q⁻¹D̃_{(1),(1)} + q⁻¹D̃_{(0,1),(1)} + q⁻²D̃_{(0),(0)} の組（n >= 2）
    """
    a = as_weak_composition(a)
    if len(a) < 2:
        raise DimensionMismatch(f"n >= 2 が必要です: a = {a}")
    lhs = d_brute((1, 1), (1, 1), a)
    rhs = (
        dt_brute((1, 1), (1, 1), a)
        + dt_brute((1,), (1,), a).shift(-1)
        + dt_brute((0, 1), (1,), a).shift(-1)
        + dt_brute((0,), (), a).shift(-2)
    )
    return lhs, rhs
