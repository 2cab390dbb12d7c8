"""
スイート実行モジュール

ケースを列挙して評価し、SuiteReport にまとめる。
並列実行でも結果は列挙順に並べる。
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional

from .. import __version__
from ..utils.config import Config
from ..utils.logger import get_logger
from .models import CaseRecord, CaseTask, SuiteReport, SuiteSummary, SweepConfig
from .suites import build_tasks, evaluate_case


class SuiteRunner:
    """検証スイートの実行"""

    def __init__(self, settings: Optional[Config] = None):
        self.settings = settings or Config.get()
        self.logger = get_logger()

    def plan(self, sweep: SweepConfig, timings: bool = False) -> List[CaseTask]:
        """実行するケースの一覧"""
        return build_tasks(sweep, self.settings, timings=timings)

    def _evaluate(self, tasks: List[CaseTask], jobs: int) -> Iterable[CaseRecord]:
        if jobs <= 1 or len(tasks) <= 1:
            yield from map(evaluate_case, tasks)
            return
        chunksize = max(1, len(tasks) // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            # map は入力順に結果を返す
            yield from executor.map(evaluate_case, tasks, chunksize=chunksize)

    def run(
        self,
        sweep: SweepConfig,
        timings: bool = False,
        on_case: Optional[Callable[[CaseRecord], None]] = None,
    ) -> SuiteReport:
        """
        スイートを実行する

        Args:
            sweep: スイート設定
            timings: ケースごとの所要時間をレポートに含めるか
            on_case: ケースごとのコールバック（進捗表示用）

        Returns:
            SuiteReport
        """
        tasks = self.plan(sweep, timings=timings)
        self.logger.info(
            f"スイート開始: {sweep.suite} (ケース数 {len(tasks)}, seed={sweep.seed}, 並列度 {sweep.parallelism})"
        )

        cases: List[CaseRecord] = []
        total_ms = 0.0
        for record in self._evaluate(tasks, sweep.parallelism):
            if record.elapsed_ms is not None:
                total_ms += record.elapsed_ms
            if record.passed:
                self.logger.debug(f"[{record.index}] {record.check} {record.inputs} ok")
            else:
                self.logger.warning(
                    f"[{record.index}] {record.check} {record.inputs} 不一致: {record.outputs} {record.note or ''}"
                )
            cases.append(record)
            if on_case:
                on_case(record)

        summary = SuiteSummary.from_cases(cases)
        self.logger.info(
            f"スイート終了: {sweep.suite} 成功 {summary.passed}/{summary.total}"
            + (f" ({total_ms:.1f} ms)" if timings else "")
        )
        return SuiteReport(
            suite=sweep.suite,
            version=__version__,
            config=sweep,
            cases=cases,
            summary=summary,
        )

    def verify(
        self,
        suite: str,
        n_max: Optional[int] = None,
        a_max: Optional[int] = None,
        lambda_size_max: Optional[int] = None,
        seed: int = 0,
        jobs: int = 1,
        timings: bool = False,
        on_case: Optional[Callable[[CaseRecord], None]] = None,
    ) -> SuiteReport:
        """未指定の範囲を設定ファイルの既定値で補ってスイートを実行する"""
        bounds = self.settings.get_bounds(suite)
        sweep = SweepConfig(
            suite=suite,
            n_max=bounds.n_max if n_max is None else n_max,
            a_max=bounds.a_max if a_max is None else a_max,
            lambda_size_max=bounds.lambda_size_max if lambda_size_max is None else lambda_size_max,
            seed=seed,
            parallelism=jobs,
        )
        return self.run(sweep, timings=timings, on_case=on_case)
