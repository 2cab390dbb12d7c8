"""
検証スイート定義モジュール

各スイートはケースの列挙（固定順序）と 1 ケースの評価からなる。
評価関数はモジュールレベルに置き、ワーカープロセスへ渡せるようにする。
"""

import time
from dataclasses import dataclass
from math import comb
from typing import Any, Callable, Dict, Iterator, List, Tuple

import numpy as np

from ..dyson.constant_term import (
    d_brute,
    d_closed,
    d_recursive,
    dt_brute,
    dt_kadell,
    dyson_product,
    expansion_relation_11,
    qdyson_rhs,
)
from ..dyson.lemmas import lemma31_cases, lemma31_sides
from ..dyson.orders import dominance_leq, prec_less, revlex_less
from ..dyson.splitting import verify_splitting_random
from ..dyson.vectors import compositions, integer_vectors, pad, partitions_up_to, vplus
from ..laurent.polynomial import RationalPoint, XPoly
from ..qseries.binomial import qbinom, qbinom_quotient
from ..qseries.identities import prop41_sum, qbinomial_theorem_rhs
from ..qseries.pochhammer import pochhammer
from ..utils.config import Config
from ..utils.errors import AlgebraError
from .models import CaseRecord, CaseTask, SweepConfig


# (check, inputs) の列
CaseList = Iterator[Tuple[str, Dict[str, Any]]]


@dataclass(frozen=True)
class SuiteDef:
    """スイートの定義"""
    name: str
    description: str
    enumerate: Callable[[SweepConfig, Config], CaseList]
    evaluate: Callable[[CaseTask], Tuple[Dict[str, str], bool, Any]]


def _inputs(**kwargs: Any) -> Dict[str, Any]:
    return {key: list(value) if isinstance(value, tuple) else value for key, value in kwargs.items()}


def _grid(sweep: SweepConfig, settings: Config) -> Iterator[Tuple[int, Tuple[int, ...], Tuple[int, ...]]]:
    """(n, a, λ) を辞書式に。λ は長さ n 以下でゼロ詰め済み"""
    for n in range(1, sweep.n_max + 1):
        for a in compositions(n, sweep.a_max):
            for lam in partitions_up_to(sweep.lambda_size_max, n, settings.window.part_max):
                yield n, a, pad(lam, n)


# --- thm1: 積公式と消滅 ---

def _enum_thm1(sweep: SweepConfig, settings: Config) -> CaseList:
    window = settings.window
    for n, a, lam in _grid(sweep, settings):
        yield "product", _inputs(n=n, a=a, v=lam, **{"lambda": lam})
        for v in integer_vectors(n, sum(lam), window.v_min, window.v_max):
            if prec_less(v, lam):
                yield "vanishing", _inputs(n=n, a=a, v=v, **{"lambda": lam})


def _eval_thm1(task: CaseTask):
    p = task.params
    brute = d_brute(p["v"], p["lambda"], p["a"])
    if task.check == "product":
        closed = d_closed(p["lambda"], p["a"])
        return {"brute": str(brute), "closed": str(closed)}, brute == closed, None
    return {"brute": str(brute)}, brute.is_zero(), None


# --- qdyson ---

def _enum_qdyson(sweep: SweepConfig, settings: Config) -> CaseList:
    for n in range(1, sweep.n_max + 1):
        for a in compositions(n, sweep.a_max):
            yield "constant_term", _inputs(n=n, a=a)


def _eval_qdyson(task: CaseTask):
    a = task.params["a"]
    ct = dyson_product(a).constant_term()
    rhs = qdyson_rhs(a)
    return {"constant_term": str(ct), "multinomial": str(rhs)}, ct == rhs, None


# --- kadell ---

def _enum_kadell(sweep: SweepConfig, settings: Config) -> CaseList:
    for n in range(1, sweep.n_max + 1):
        for a in compositions(n, sweep.a_max):
            for r in range(1, sweep.lambda_size_max + 1):
                for v in integer_vectors(n, r, 0, r):
                    yield "kadell", _inputs(n=n, a=a, r=r, v=v)


def _eval_kadell(task: CaseTask):
    p = task.params
    brute = dt_brute(p["v"], [p["r"]], p["a"])
    kadell = dt_kadell(p["v"], p["r"], p["a"])
    return {"brute": str(brute), "kadell": str(kadell)}, brute == kadell, None


# --- lemma31 ---

def _enum_lemma31(sweep: SweepConfig, settings: Config) -> CaseList:
    for which, i, j, k in lemma31_cases(sweep.n_max):
        yield which, _inputs(i=i, j=j, k=k)


def _eval_lemma31(task: CaseTask):
    p = task.params
    lhs, rhs = lemma31_sides(p["i"], p["j"], p["k"], task.check)
    return {"lhs": lhs.render(["z"]), "rhs": rhs.render(["z"])}, lhs == rhs, None


# --- lemma32: 部分分数分解 ---

def _enum_lemma32(sweep: SweepConfig, settings: Config) -> CaseList:
    for n in range(1, sweep.n_max + 1):
        for a in compositions(n, sweep.a_max):
            yield "splitting", _inputs(n=n, a=a)


def _render_point(point: RationalPoint) -> str:
    values = ", ".join(str(value) for value in point.values)
    return f"q={point.q}; ({values})"


def _eval_lemma32(task: CaseTask):
    rng = np.random.default_rng([task.seed, task.index])
    results = verify_splitting_random(task.params["a"], rng, sampling=task.sampling)
    outputs = {
        f"point{m}": f"{_render_point(point)} {'ok' if ok else 'mismatch'}"
        for m, (point, ok) in enumerate(results, start=1)
    }
    bad = [m for m, (_, ok) in enumerate(results, start=1) if not ok]
    note = f"不一致の点: {bad}" if bad else None
    return outputs, not bad, note


# --- prop41 と q 二項定理 ---

def _enum_prop41(sweep: SweepConfig, settings: Config) -> CaseList:
    for n in range(sweep.n_max + 1):
        for t in range(n + 1):
            yield "prop41", _inputs(n=n, t=t)
    for t in range(sweep.n_max + 1):
        yield "qbinomial_theorem", _inputs(t=t)


def _eval_prop41(task: CaseTask):
    p = task.params
    if task.check == "prop41":
        total = prop41_sum(p["n"], p["t"])
        expected = qbinom(p["n"], p["t"])
        return {"sum": str(total), "qbinom": str(expected)}, total == expected, None
    lhs = pochhammer(XPoly.variable(1, 0), p["t"])
    rhs = qbinomial_theorem_rhs(p["t"])
    return {"product": lhs.render(["z"]), "sum": rhs.render(["z"])}, lhs == rhs, None


# --- recursion ---

def _enum_recursion(sweep: SweepConfig, settings: Config) -> CaseList:
    window = settings.window
    for n, a, lam in _grid(sweep, settings):
        for v in integer_vectors(n, sum(lam), window.v_min, window.v_max):
            if lam[0] >= max(v):
                yield "recursion", _inputs(n=n, a=a, v=v, **{"lambda": lam})


def _eval_recursion(task: CaseTask):
    p = task.params
    brute = d_brute(p["v"], p["lambda"], p["a"])
    recursive = d_recursive(p["v"], p["lambda"], p["a"])
    return {"brute": str(brute), "recursive": str(recursive)}, brute == recursive, None


# --- cai: 支配順序による消滅（対偶） ---

def _enum_cai(sweep: SweepConfig, settings: Config) -> CaseList:
    window = settings.window
    size_max = sweep.lambda_size_max
    for n in range(1, sweep.n_max + 1):
        for a in compositions(n, sweep.a_max):
            for lam in partitions_up_to(size_max, size_max, window.part_max):
                for v in integer_vectors(n, sum(lam), window.v_min, window.v_max):
                    if not dominance_leq(lam, vplus(v)):
                        yield "cai", _inputs(n=n, a=a, v=v, **{"lambda": lam})


def _eval_cai(task: CaseTask):
    p = task.params
    brute = dt_brute(p["v"], p["lambda"], p["a"])
    return {"brute": str(brute)}, brute.is_zero(), None


# --- section5: 個別の例 ---

SECTION5_ZERO_V = ((0, 5, 2), (5, 0, 2))
SECTION5_NONZERO_V = ((5, 2, 0), (2, 0, 5), (2, 5, 0), (0, 2, 5))
SECTION5_LAMBDA = (4, 3)


def _enum_section5(sweep: SweepConfig, settings: Config) -> CaseList:
    examples = settings.section5
    for a in examples.zero_a:
        for v in SECTION5_ZERO_V:
            yield "vanishing", _inputs(a=a, v=v, **{"lambda": SECTION5_LAMBDA})
    for a in examples.zero_a:
        # 2 番目の成分を除いた a での D̃_{(1,2),(3)}
        reduced = [part for pos, part in enumerate(a) if pos != 1]
        yield "reduced_vanishing", _inputs(a=reduced, v=(1, 2), **{"lambda": (3,)})
    for a in examples.nonzero_a:
        required = list(a) in [list(x) for x in examples.required_nonzero_a]
        for v in SECTION5_NONZERO_V:
            yield "nonvanishing", _inputs(a=a, v=v, required=required, **{"lambda": SECTION5_LAMBDA})
    for n in range(2, sweep.n_max + 1):
        for a in compositions(n, sweep.a_max):
            yield "expansion", _inputs(a=a)


def _eval_section5(task: CaseTask):
    p = task.params
    if task.check == "vanishing":
        value = d_brute(p["v"], p["lambda"], p["a"])
        return {"brute": str(value)}, value.is_zero(), None
    if task.check == "reduced_vanishing":
        value = dt_brute(p["v"], p["lambda"], p["a"])
        return {"brute": str(value)}, value.is_zero(), None
    if task.check == "nonvanishing":
        value = d_brute(p["v"], p["lambda"], p["a"])
        nonzero = not value.is_zero()
        if p["required"]:
            return {"brute": str(value)}, nonzero, None
        return {"brute": str(value)}, True, f"参考値（非消滅: {'yes' if nonzero else 'no'}）"
    lhs, rhs = expansion_relation_11(p["a"])
    return {"lhs": str(lhs), "rhs": str(rhs)}, lhs == rhs, None


# --- corollary ---

def _enum_corollary(sweep: SweepConfig, settings: Config) -> CaseList:
    window = settings.window
    for n, a, lam in _grid(sweep, settings):
        for v in integer_vectors(n, sum(lam), 0, window.v_max):
            if revlex_less(vplus(v), lam):
                yield "corollary", _inputs(n=n, a=a, v=v, **{"lambda": lam})


def _eval_corollary(task: CaseTask):
    p = task.params
    value = d_brute(p["v"], p["lambda"], p["a"])
    return {"brute": str(value)}, value.is_zero(), None


# --- qbinom ---

def _enum_qbinom(sweep: SweepConfig, settings: Config) -> CaseList:
    for n in range(sweep.n_max + 1):
        for k in range(n + 1):
            yield "qbinom", _inputs(n=n, k=k)


def _eval_qbinom(task: CaseTask):
    n, k = task.params["n"], task.params["k"]
    value = qbinom(n, k)
    quotient = qbinom_quotient(n, k)
    ok = value == quotient and value == qbinom(n, n - k) and value.at_one() == comb(n, k)
    return {"qbinom": str(value), "quotient": str(quotient)}, ok, None


SUITES: Dict[str, SuiteDef] = {
    suite.name: suite
    for suite in (
        SuiteDef("thm1", "積公式 D(λ,λ,a) と v ≺ λ での消滅", _enum_thm1, _eval_thm1),
        SuiteDef("qdyson", "q-Dyson 定数項恒等式", _enum_qdyson, _eval_qdyson),
        SuiteDef("kadell", "Kadell の公式による D̃_{v,(r)}", _enum_kadell, _eval_kadell),
        SuiteDef("lemma31", "q シフト階乗の書き換え恒等式", _enum_lemma31, _eval_lemma31),
        SuiteDef("lemma32", "F(a,w) の部分分数分解（有理点評価）", _enum_lemma32, _eval_lemma32),
        SuiteDef("prop41", "q 二項係数の交代和表示と q 二項定理", _enum_prop41, _eval_prop41),
        SuiteDef("recursion", "漸化式と全展開の一致", _enum_recursion, _eval_recursion),
        SuiteDef("cai", "支配順序が成り立たないときの D̃ の消滅", _enum_cai, _eval_cai),
        SuiteDef("section5", "個別の消滅例・非消滅例と展開関係式", _enum_section5, _eval_section5),
        SuiteDef("corollary", "v⁺ <ᴿ λ での D の消滅", _enum_corollary, _eval_corollary),
        SuiteDef("qbinom", "q 二項係数の対称性・商表示・q=1 特殊化", _enum_qbinom, _eval_qbinom),
    )
}


def build_tasks(sweep: SweepConfig, settings: Config, timings: bool = False) -> List[CaseTask]:
    """スイートのケースを固定順序で列挙する"""
    suite = SUITES[sweep.suite]
    return [
        CaseTask(
            suite=sweep.suite,
            index=index,
            check=check,
            seed=sweep.seed,
            params=inputs,
            sampling=settings.sampling,
            timings=timings,
        )
        for index, (check, inputs) in enumerate(suite.enumerate(sweep, settings))
    ]


def evaluate_case(task: CaseTask) -> CaseRecord:
    """
    1 ケースを評価する

    閉じた式の割り切り除算の失敗や極の回避失敗は、例外にせず失敗ケースとして記録する
    """
    start = time.perf_counter()
    try:
        outputs, passed, note = SUITES[task.suite].evaluate(task)
    except AlgebraError as e:
        outputs, passed, note = {}, False, f"{type(e).__name__}: {e}"
    elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    inputs = {key: value for key, value in task.params.items() if key != "required"}
    return CaseRecord(
        index=task.index,
        check=task.check,
        inputs=inputs,
        outputs=outputs,
        passed=passed,
        note=note,
        elapsed_ms=elapsed_ms if task.timings else None,
    )
