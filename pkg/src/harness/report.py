"""
レポート表示モジュール

SuiteReport と ComputeResult を rich のテーブルで表示する
"""

from typing import Any, Dict

from rich.console import Console
from rich.table import Table

from .models import ComputeResult, SuiteReport


def _format_inputs(inputs: Dict[str, Any]) -> str:
    parts = []
    for key, value in inputs.items():
        if isinstance(value, list):
            value = "(" + ",".join(str(x) for x in value) + ")"
        parts.append(f"{key}={value}")
    return " ".join(parts)


def render_report(report: SuiteReport, console: Console, show_all: bool = True) -> None:
    """スイートのレポートをテーブル表示する（失敗行は赤）"""
    table = Table(title=f"{report.suite} (seed={report.config.seed}, v{report.version})")
    table.add_column("#", style="cyan", justify="right")
    table.add_column("検査", style="magenta")
    table.add_column("入力", style="white")
    table.add_column("出力", style="yellow")
    table.add_column("結果")

    for case in report.cases:
        if not show_all and case.passed:
            continue
        outputs = "\n".join(f"{key}: {value}" for key, value in case.outputs.items())
        if case.note:
            outputs = f"{outputs}\n({case.note})" if outputs else f"({case.note})"
        verdict = "[green]OK[/green]" if case.passed else "[bold red]NG[/bold red]"
        table.add_row(
            str(case.index),
            case.check,
            _format_inputs(case.inputs),
            outputs,
            verdict,
            style=None if case.passed else "red",
        )

    console.print(table)
    summary = report.summary
    color = "green" if summary.all_pass else "red"
    console.print(f"[{color}]成功 {summary.passed}/{summary.total}、失敗 {summary.failed}[/{color}]")


def render_compute(result: ComputeResult, console: Console) -> None:
    """compute の結果を表示する"""
    case = result.case
    table = Table(title=f"{case.kind}_{{v={tuple(case.v)}, λ={tuple(case.lam)}}}(a={tuple(case.a)})")
    table.add_column("手法", style="cyan")
    table.add_column("値", style="green")
    for method, value in result.outputs.items():
        table.add_row(method, value)
    console.print(table)
    if result.agree:
        console.print("[green]全手法が一致しました[/green]")
    else:
        console.print("[bold red]手法間で値が一致しません[/bold red]")
