"""
共通フィクスチャ
"""

import logging
from pathlib import Path

import numpy as np
import pytest

from src.exact.laurent import QLaurent
from src.utils.config import Config
from src.utils.logger import setup_logger


@pytest.fixture(autouse=True)
def fresh_config():
    """テストごとに既定値の設定を使う"""
    Config.reset()
    config = Config.load(Path("does-not-exist.yaml"))
    setup_logger(level=logging.WARNING)
    yield config
    Config.reset()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def q():
    return QLaurent.monomial(1)


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    """WARNING レベルの config.yaml を置いた作業ディレクトリ"""
    (tmp_path / "config.yaml").write_text(
        'logging:\n  level: "WARNING"\noutput:\n  reports_dir: "reports"\n',
        encoding="utf-8",
    )
    monkeypatch.chdir(tmp_path)
    return tmp_path
