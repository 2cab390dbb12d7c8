#!/usr/bin/env python3
"""
q-Dyson 定数項検証カーネル

メインエントリーポイント
"""

from enum import Enum
from pathlib import Path
from typing import List, NoReturn, Optional

import typer
import yaml
from pydantic import ValidationError
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from src.harness import (
    SUITES,
    CaseSpec,
    SuiteReport,
    SuiteRunner,
    SweepConfig,
    compute as compute_case,
    render_compute,
    render_report,
)
from src.utils.config import Config
from src.utils.errors import AlgebraError, ShapeError
from src.utils.logger import get_logger, setup_logger


app = typer.Typer(
    name="qdyson",
    help="一般化 q-Dyson 定数項の正確な計算と恒等式の検証",
    add_completion=False,
)
console = Console()
err_console = Console(stderr=True)

_state = {"verbose": False, "log_file": None}


class OutputFormat(str, Enum):
    """出力形式"""
    TEXT = "text"
    JSON = "json"


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", help="DEBUG ログを出す"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", help="ログファイル"),
):
    """一般化 q-Dyson 定数項の正確な計算と恒等式の検証"""
    _state["verbose"] = verbose
    _state["log_file"] = log_file


def init_app() -> Config:
    """アプリケーション初期化"""
    config = Config.load(Path("config.yaml"))
    level = "DEBUG" if _state["verbose"] else config.logging.level
    log_file = _state["log_file"] or (Path(config.logging.file) if config.logging.file else None)
    setup_logger(level=level, log_file=log_file)
    return config


def _fail(message: str, code: int = 2) -> NoReturn:
    err_console.print(f"[red]エラー: {message}[/red]")
    raise typer.Exit(code)


def _parse_ints(text: str, name: str) -> List[int]:
    """カンマ区切りの整数列（空文字列は空列）"""
    text = text.strip().strip("()")
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        _fail(f"{name} は整数のカンマ区切りで指定してください: {text!r}")


def _validation_message(error: ValidationError) -> str:
    lines = []
    for item in error.errors():
        loc = ".".join(str(x) for x in item["loc"]) or "(root)"
        lines.append(f"{loc}: {item['msg']}")
    return "; ".join(lines)


def _run_and_emit(
    config: Config,
    sweep: SweepConfig,
    output_format: OutputFormat,
    save: bool,
    timings: bool,
) -> None:
    runner = SuiteRunner(config)
    with Progress(
        SpinnerColumn(),
        TextColumn("[bold blue]{task.description}"),
        console=err_console,
        transient=True,
    ) as progress:
        task = progress.add_task(f"{sweep.suite} を検証中...", total=None)
        report: SuiteReport = runner.run(
            sweep,
            timings=timings,
            on_case=lambda record: progress.advance(task),
        )

    if save:
        path = config.reports_path() / f"{sweep.suite}_seed{sweep.seed}.json"
        report.to_json(path)
        err_console.print(f"[green]レポート保存: {path}[/green]")

    if output_format == OutputFormat.JSON:
        typer.echo(report.to_json())
    else:
        render_report(report, console)

    if not report.summary.all_pass:
        raise typer.Exit(1)


@app.command()
def compute(
    kind: str = typer.Option(..., "--kind", help="D または Dt"),
    v: str = typer.Option("", "--v", help="整数ベクトル v（カンマ区切り）"),
    lam: str = typer.Option("", "--lambda", help="分割 λ（カンマ区切り）"),
    a: str = typer.Option(..., "--a", help="弱組成 a（カンマ区切り）"),
    methods: str = typer.Option("brute", "--methods", help="brute, closed, recursive, kadell"),
    output_format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", help="出力形式"),
):
    """D または D̃ を指定の手法で計算して照合"""
    init_app()
    logger = get_logger()

    try:
        case = CaseSpec(
            kind=kind,
            v=_parse_ints(v, "--v"),
            lam=_parse_ints(lam, "--lambda"),
            a=_parse_ints(a, "--a"),
            methods=[m.strip() for m in methods.split(",") if m.strip()],
        )
    except ValidationError as e:
        _fail(_validation_message(e))

    try:
        result = compute_case(case)
    except ShapeError as e:
        _fail(str(e))
    except AlgebraError as e:
        # 閉じた式が多項式にならない: 手法間の不一致として扱う
        logger.warning(f"{type(e).__name__}: {e}")
        err_console.print(f"[bold red]{type(e).__name__}: {e}[/bold red]")
        raise typer.Exit(1)

    if output_format == OutputFormat.JSON:
        typer.echo(result.to_json())
    else:
        render_compute(result, console)

    if not result.agree:
        raise typer.Exit(1)


@app.command()
def verify(
    suite: str = typer.Option(..., "--suite", "-s", help="スイート名"),
    n_max: Optional[int] = typer.Option(None, "--n-max", help="n の上限"),
    a_max: Optional[int] = typer.Option(None, "--a-max", help="a_i の上限"),
    lambda_size_max: Optional[int] = typer.Option(None, "--lambda-size-max", help="|λ| の上限"),
    seed: int = typer.Option(0, "--seed", help="乱数シード"),
    jobs: int = typer.Option(1, "--jobs", "-j", help="並列プロセス数"),
    output_format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", help="出力形式"),
    save: bool = typer.Option(False, "--save", help="レポートを保存する"),
    timings: bool = typer.Option(False, "--timings", help="ケースごとの所要時間を含める"),
):
    """組み込みスイートで恒等式を検証"""
    config = init_app()

    if suite not in SUITES:
        _fail(f"未知のスイートです: {suite}（python main.py suites で一覧を表示）")

    bounds = config.get_bounds(suite)
    try:
        sweep = SweepConfig(
            suite=suite,
            n_max=bounds.n_max if n_max is None else n_max,
            a_max=bounds.a_max if a_max is None else a_max,
            lambda_size_max=bounds.lambda_size_max if lambda_size_max is None else lambda_size_max,
            seed=seed,
            parallelism=jobs,
        )
    except ValidationError as e:
        _fail(_validation_message(e))

    _run_and_emit(config, sweep, output_format, save, timings)


@app.command()
def sweep(
    config_file: Path = typer.Option(..., "--config", "-c", help="スイート設定ファイル (JSON)"),
    output_format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", help="出力形式"),
    save: bool = typer.Option(False, "--save", help="レポートを保存する"),
    timings: bool = typer.Option(False, "--timings", help="ケースごとの所要時間を含める"),
):
    """設定ファイルに書かれたスイートを実行"""
    config = init_app()

    if not config_file.exists():
        _fail(f"設定ファイルが見つかりません: {config_file}")

    try:
        sweep_config = SweepConfig.from_file(config_file)
    except ValidationError as e:
        _fail(f"{config_file}: {_validation_message(e)}")
    except (yaml.YAMLError, OSError) as e:
        _fail(f"{config_file} を読み込めません: {e}")

    _run_and_emit(config, sweep_config, output_format, save, timings)


@app.command()
def suites():
    """スイート一覧と既定の探索範囲を表示"""
    config = init_app()

    table = Table(title="検証スイート一覧")
    table.add_column("名前", style="cyan")
    table.add_column("内容", style="green")
    table.add_column("n_max", style="yellow", justify="right")
    table.add_column("a_max", style="yellow", justify="right")
    table.add_column("lambda_size_max", style="yellow", justify="right")

    for name, suite_def in SUITES.items():
        bounds = config.get_bounds(name)
        table.add_row(
            name,
            suite_def.description,
            str(bounds.n_max),
            str(bounds.a_max),
            str(bounds.lambda_size_max),
        )

    console.print(table)


@app.command()
def version():
    """バージョン情報を表示"""
    from src import __version__
    console.print(f"q-Dyson 定数項検証カーネル v{__version__}")


if __name__ == "__main__":
    app()
