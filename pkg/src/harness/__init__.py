"""Verification harness module"""
from .compute import compute, run_method
from .models import (
    CaseRecord,
    CaseSpec,
    CaseTask,
    ComputeResult,
    SUITE_NAMES,
    SuiteReport,
    SuiteSummary,
    SweepConfig,
)
from .report import render_compute, render_report
from .runner import SuiteRunner
from .suites import SUITES, build_tasks, evaluate_case

__all__ = [
    "compute",
    "run_method",
    "CaseRecord",
    "CaseSpec",
    "CaseTask",
    "ComputeResult",
    "SUITE_NAMES",
    "SuiteReport",
    "SuiteSummary",
    "SweepConfig",
    "render_compute",
    "render_report",
    "SuiteRunner",
    "SUITES",
    "build_tasks",
    "evaluate_case",
]
