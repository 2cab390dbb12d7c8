"""
単一ケースの計算

CaseSpec で指定された手法で D または D̃ を計算し、手法間の一致を判定する
"""

from typing import Dict

from ..dyson.constant_term import d_brute, d_closed, d_recursive, dt_brute, dt_kadell
from ..dyson.orders import prec_less
from ..dyson.vectors import as_partition, pad, strip_zeros
from ..exact.laurent import QLaurent
from ..utils.errors import NotApplicable
from .models import CaseSpec, ComputeResult


def _d_closed_for(case: CaseSpec) -> QLaurent:
    """
    v = λ なら積公式、v ≺ λ または |v| ≠ |λ| なら 0

    それ以外は閉じた式が知られていない
    """
    n = len(case.a)
    v, lam = pad(case.v, n), pad(as_partition(case.lam), n)
    if v == lam:
        return d_closed(lam, case.a)
    if sum(v) != sum(lam) or prec_less(v, lam):
        return QLaurent.zero()
    raise NotApplicable(f"v = {v} は v ⪯ λ = {lam} を満たさないため閉じた式がありません")


def _dt_kadell_for(case: CaseSpec) -> QLaurent:
    lam = strip_zeros(as_partition(case.lam))
    if len(lam) != 1:
        raise NotApplicable(f"kadell は一パートの λ = (r) のみ対応します: {tuple(case.lam)}")
    return dt_kadell(case.v, lam[0], case.a)


def run_method(case: CaseSpec, method: str) -> QLaurent:
    """
    一つの手法で値を求める

    Raises:
        NotApplicable: この入力に使えない手法
    """
    if case.kind == "D":
        if method == "brute":
            return d_brute(case.v, case.lam, case.a)
        if method == "closed":
            return _d_closed_for(case)
        if method == "recursive":
            return d_recursive(case.v, case.lam, case.a)
    else:
        if method == "brute":
            return dt_brute(case.v, case.lam, case.a)
        if method == "kadell":
            return _dt_kadell_for(case)
    raise NotApplicable(f"{method} は {case.kind} に使えません")


def compute(case: CaseSpec) -> ComputeResult:
    """要求された全手法で計算し、一致したかを返す"""
    values: Dict[str, QLaurent] = {method: run_method(case, method) for method in case.methods}
    distinct = set(values.values())
    return ComputeResult(
        case=case,
        outputs={method: str(value) for method, value in values.items()},
        agree=len(distinct) <= 1,
    )
