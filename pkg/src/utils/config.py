"""
設定管理モジュール

YAML設定ファイルの読み込みと管理を行う
"""

from pathlib import Path
from typing import ClassVar, Dict, List, Optional

import yaml
from pydantic import BaseModel, Field


class LoggingConfig(BaseModel):
    """ログ設定"""
    level: str = "INFO"
    file: Optional[str] = None


class SuiteBounds(BaseModel):
    """スイートごとの既定の探索範囲"""
    n_max: int = Field(default=3, ge=0)
    a_max: int = Field(default=2, ge=0)
    lambda_size_max: int = Field(default=4, ge=0)


def _default_bounds() -> Dict[str, SuiteBounds]:
    return {
        "thm1": SuiteBounds(n_max=3, a_max=2, lambda_size_max=4),
        "qdyson": SuiteBounds(n_max=4, a_max=2, lambda_size_max=0),
        "kadell": SuiteBounds(n_max=3, a_max=2, lambda_size_max=3),
        "lemma31": SuiteBounds(n_max=4, a_max=0, lambda_size_max=0),
        "lemma32": SuiteBounds(n_max=3, a_max=2, lambda_size_max=0),
        "prop41": SuiteBounds(n_max=10, a_max=0, lambda_size_max=0),
        "recursion": SuiteBounds(n_max=3, a_max=2, lambda_size_max=4),
        "cai": SuiteBounds(n_max=3, a_max=2, lambda_size_max=4),
        "section5": SuiteBounds(n_max=3, a_max=2, lambda_size_max=7),
        "corollary": SuiteBounds(n_max=3, a_max=2, lambda_size_max=4),
        "qbinom": SuiteBounds(n_max=12, a_max=0, lambda_size_max=0),
    }


class WindowConfig(BaseModel):
    """整数ベクトル v の探索窓"""
    v_min: int = -1
    v_max: int = 4
    part_max: int = Field(default=4, ge=0)  # λ の各パートの上限


def _first_primes(count: int) -> List[int]:
    primes: List[int] = []
    candidate = 2
    while len(primes) < count:
        if all(candidate % p for p in primes):
            primes.append(candidate)
        candidate += 1
    return primes


class SamplingConfig(BaseModel):
    """有理点サンプリング設定"""
    points_per_case: int = Field(default=5, ge=1)
    pole_retry_budget: int = Field(default=100, ge=1)
    q_min: int = Field(default=2, ge=1)  # q = p/s, q_min <= p, s <= q_max
    q_max: int = Field(default=7, ge=2)
    prime_pool: List[int] = Field(default_factory=lambda: _first_primes(30))


class Section5Config(BaseModel):
    """消滅例・非消滅例で使う a の集合"""
    zero_a: List[List[int]] = Field(default_factory=lambda: [[1, 1, 1], [2, 1, 1], [1, 2, 1]])
    nonzero_a: List[List[int]] = Field(default_factory=lambda: [[1, 1, 1], [2, 1, 1], [1, 2, 1]])
    required_nonzero_a: List[List[int]] = Field(default_factory=lambda: [[1, 1, 1]])


class OutputConfig(BaseModel):
    """出力先設定"""
    reports_dir: str = "output/reports"


class Config(BaseModel):
    """メイン設定クラス"""
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    sweep_defaults: Dict[str, SuiteBounds] = Field(default_factory=_default_bounds)
    window: WindowConfig = Field(default_factory=WindowConfig)
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    section5: Section5Config = Field(default_factory=Section5Config)
    output: OutputConfig = Field(default_factory=OutputConfig)

    _instance: ClassVar[Optional["Config"]] = None
    _config_path: ClassVar[Optional[Path]] = None

    @classmethod
    def load(cls, config_path: Optional[Path] = None) -> "Config":
        """設定ファイルを読み込む"""
        if config_path is None:
            config_path = Path("config.yaml")

        if not config_path.exists():
            # デフォルト設定を返す
            config = cls()
            cls._instance = config
            return config

        with open(config_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}

        # 未指定のスイートは既定値で補う
        if "sweep_defaults" in data:
            bounds = _default_bounds()
            for name, bound_data in (data["sweep_defaults"] or {}).items():
                bounds[name] = SuiteBounds(**bound_data)
            data["sweep_defaults"] = bounds

        config = cls(**data)
        cls._instance = config
        cls._config_path = config_path
        return config

    @classmethod
    def get(cls) -> "Config":
        """シングルトンインスタンスを取得"""
        if cls._instance is None:
            cls._instance = cls.load()
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        """シングルトンを破棄する（テスト用）"""
        cls._instance = None
        cls._config_path = None

    def get_bounds(self, suite: str) -> SuiteBounds:
        """スイートの既定範囲を取得"""
        return self.sweep_defaults.get(suite, SuiteBounds())

    def reports_path(self) -> Path:
        """レポート出力ディレクトリ"""
        base_path = self._config_path.parent if self._config_path else Path(".")
        return base_path / self.output.reports_dir

    def ensure_directories(self) -> None:
        """必要なディレクトリを作成"""
        self.reports_path().mkdir(parents=True, exist_ok=True)
