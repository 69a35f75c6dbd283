"""Pytest 配置和共享 fixtures。"""

import logging
import os
from collections.abc import Generator

import pytest

from gradualsemantics.config.settings import Settings, reset_settings
from gradualsemantics.models.graph import StatementGraph
from gradualsemantics.parsing import load_sg
from tests.fixtures.sample_graphs import (
    CLIMATE_GRAPH,
    COMPLETENESS_STAGE_1,
    COMPLETENESS_STAGE_2,
    COMPLETENESS_STAGE_3,
)


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch) -> Generator[None, None, None]:
    """每个测试使用全新的配置，且不受外部 GRADUAL_ 环境变量影响。"""
    for key in list(os.environ):
        if key.startswith("GRADUAL_"):
            monkeypatch.delenv(key, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture(autouse=True)
def restore_root_logger() -> Generator[None, None, None]:
    """命令行测试会重新配置根 logger，测试后恢复。"""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def test_settings() -> Settings:
    """测试用配置。"""
    return Settings(
        default_semantics="tnorm-p",
        fuzz_trials=20,
        fuzz_seed=7,
        max_statements=5,
        atom_pool_size=4,
    )


@pytest.fixture
def climate_graph() -> StatementGraph:
    """气候辩论陈述图。"""
    return load_sg(CLIMATE_GRAPH)


@pytest.fixture
def climate_text() -> str:
    """气候辩论陈述图的 DSL 文本。"""
    return CLIMATE_GRAPH


@pytest.fixture
def completeness_stages() -> list[StatementGraph]:
    """完备性分类的三个阶段。"""
    return [load_sg(text) for text in (COMPLETENESS_STAGE_1, COMPLETENESS_STAGE_2, COMPLETENESS_STAGE_3)]
