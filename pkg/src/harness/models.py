"""
ハーネスのデータモデル

計算ケース・スイート設定・レポートを pydantic で定義する
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..utils.config import SamplingConfig


Kind = Literal["D", "Dt"]
Method = Literal["brute", "closed", "recursive", "kadell"]

SUITE_NAMES = (
    "thm1",
    "qdyson",
    "kadell",
    "lemma31",
    "lemma32",
    "prop41",
    "recursion",
    "cai",
    "section5",
    "corollary",
    "qbinom",
)

APPLICABLE_METHODS: Dict[str, tuple] = {
    "D": ("brute", "closed", "recursive"),
    "Dt": ("brute", "kadell"),
}


class CaseSpec(BaseModel):
    """compute コマンドの入力"""
    model_config = ConfigDict(populate_by_name=True)

    kind: Kind
    v: List[int]
    lam: List[int] = Field(alias="lambda")
    a: List[int]
    methods: List[Method] = Field(default_factory=lambda: ["brute"], min_length=1)

    @model_validator(mode="after")
    def _check_methods(self) -> "CaseSpec":
        allowed = APPLICABLE_METHODS[self.kind]
        for method in self.methods:
            if method not in allowed:
                raise ValueError(f"{method} は {self.kind} に使えません（使えるのは {', '.join(allowed)}）")
        if len(set(self.methods)) != len(self.methods):
            raise ValueError(f"手法が重複しています: {self.methods}")
        if len(self.v) > len(self.a):
            raise ValueError(f"v の長さ {len(self.v)} が n = {len(self.a)} を超えています")
        return self


class SweepConfig(BaseModel):
    """スイート実行の設定（sweep --config の文書と同じ形）"""
    model_config = ConfigDict(extra="forbid")

    suite: Literal[SUITE_NAMES]  # type: ignore[valid-type]
    n_max: int = Field(ge=0)
    a_max: int = Field(default=0, ge=0)
    lambda_size_max: int = Field(default=0, ge=0)
    seed: int = 0
    parallelism: int = Field(default=1, ge=1)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "SweepConfig":
        """
        設定文書を読み込む（JSON は YAML として読める）

        Raises:
            pydantic.ValidationError: スキーマ違反（未知のフィールドを含む）
            yaml.YAMLError: 構文エラー
        """
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
        return cls.model_validate(data)


class CaseTask(BaseModel):
    """ワーカーに渡す 1 ケース分の仕事"""
    suite: str
    index: int
    check: str
    seed: int
    params: Dict[str, Any]
    sampling: Optional[SamplingConfig] = None
    timings: bool = False


class CaseRecord(BaseModel):
    """1 ケースの結果"""
    model_config = ConfigDict(populate_by_name=True)

    index: int
    check: str
    inputs: Dict[str, Any]
    outputs: Dict[str, str]
    passed: bool = Field(alias="pass")
    note: Optional[str] = None
    elapsed_ms: Optional[float] = None


class SuiteSummary(BaseModel):
    """集計"""
    total: int = 0
    passed: int = 0
    failed: int = 0
    all_pass: bool = True

    @classmethod
    def from_cases(cls, cases: List[CaseRecord]) -> "SuiteSummary":
        passed = sum(1 for case in cases if case.passed)
        return cls(
            total=len(cases),
            passed=passed,
            failed=len(cases) - passed,
            all_pass=passed == len(cases),
        )


class SuiteReport(BaseModel):
    """スイートのレポート"""
    suite: str
    version: str
    config: SweepConfig
    cases: List[CaseRecord] = []
    summary: SuiteSummary = SuiteSummary()

    def failures(self) -> List[CaseRecord]:
        """失敗したケース"""
        return [case for case in self.cases if not case.passed]

    def to_dict(self) -> Dict[str, Any]:
        """辞書形式にエクスポート"""
        return self.model_dump(mode="json", by_alias=True, exclude_none=True)

    def to_json(self, path: Optional[Path] = None, indent: int = 2) -> str:
        """JSON形式にエクスポート"""
        json_str = json.dumps(self.to_dict(), ensure_ascii=False, indent=indent)
        if path:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json_str + "\n", encoding="utf-8")
        return json_str


class ComputeResult(BaseModel):
    """compute コマンドの結果"""
    case: CaseSpec
    outputs: Dict[str, str]
    agree: bool

    def to_json(self, indent: int = 2) -> str:
        data = self.model_dump(mode="json", by_alias=True)
        return json.dumps(data, ensure_ascii=False, indent=indent)
