"""性质实验数据模型测试。"""

import pytest
from pydantic import ValidationError

from gradualsemantics.models.properties import (
    FuzzConfig,
    FuzzReport,
    MatrixCell,
    MatrixStatus,
    PropertyId,
    PropertyVerdict,
    SatisfactionMatrix,
    Scenario,
    ScenarioKind,
    VerdictStatus,
)
from gradualsemantics.parsing import load_sg


class TestScenario:
    """Scenario 测试。"""

    def test_single(self, climate_graph):
        """测试单图场景。"""
        scenario = Scenario.single(climate_graph, target="a1")
        assert scenario.kind == ScenarioKind.SINGLE_GRAPH
        assert scenario.before is scenario.after
        assert scenario.role("target") == "a1"
        assert scenario.size == 4

    def test_pair_records_transformation(self, climate_graph):
        """测试图对场景记录新增陈述与权重变化。"""
        after = load_sg(
            "a1: a & b => c @ 0.8\na2: T => a @ 0.5\na3: T => b @ 0.6\n"
            "a4: d => ~a @ 0.7\na5: T => d @ 1\n"
        )
        scenario = Scenario.pair(climate_graph, after, added="a5", target="a1")
        assert scenario.kind == ScenarioKind.GRAPH_PAIR
        assert scenario.transformation is not None
        assert scenario.transformation.added == "a5"
        assert scenario.transformation.changed_weights == {"a2": (0.9, 0.5)}
        assert scenario.size == 5

    def test_graph_count_validated(self, climate_graph):
        """测试场景类型与图数量必须一致。"""
        with pytest.raises(ValidationError):
            Scenario(kind=ScenarioKind.GRAPH_PAIR, graphs=(climate_graph,), focus={})


class TestPropertyVerdict:
    """PropertyVerdict 测试。"""

    def test_violated_requires_witness(self):
        """测试违反判定必须携带证据。"""
        with pytest.raises(ValidationError):
            PropertyVerdict(
                pid=PropertyId.STABILITY, semantics="tnorm-p", status=VerdictStatus.VIOLATED
            )

    def test_holds_without_witness(self):
        """测试成立判定不需要证据。"""
        verdict = PropertyVerdict(
            pid=PropertyId.STABILITY, semantics="tnorm-p", status=VerdictStatus.HOLDS
        )
        assert verdict.witness is None
        assert verdict.vacuous is False


class TestFuzzModels:
    """随机试验模型测试。"""

    def test_config_from_settings(self, monkeypatch):
        """测试由配置构造生成界限。"""
        monkeypatch.setenv("GRADUAL_MAX_STATEMENTS", "5")
        monkeypatch.setenv("GRADUAL_ATOM_POOL_SIZE", "3")
        config = FuzzConfig.from_settings()
        assert config.max_statements == 5
        assert config.atom_pool_size == 3
        assert config.max_attempts == 200

    def test_config_bounds(self):
        """测试界限校验。"""
        with pytest.raises(ValidationError):
            FuzzConfig(max_statements=1)
        with pytest.raises(ValidationError):
            FuzzConfig(continuous_weight_share=1.5)

    def test_report_vacuous_count(self):
        """测试空真试验数。"""
        report = FuzzReport(
            pid=PropertyId.NEUTRALITY, semantics="dfquad", seed=1, trials=10, triggered=4
        )
        assert report.vacuous == 6


class TestSatisfactionMatrix:
    """SatisfactionMatrix 测试。"""

    def test_symbols(self):
        """测试单元符号。"""
        assert MatrixStatus.NOT_APPLICABLE.symbol == "−"
        assert MatrixStatus.NO_COUNTEREXAMPLE.symbol == "✓"
        assert MatrixStatus.VIOLATED_BY_FIXTURE.symbol == "×"
        assert MatrixStatus.VIOLATED_BY_FUZZ.symbol == "×"

    def test_cell_lookup(self):
        """测试按行列查找单元。"""
        cell = MatrixCell(
            semantics="qem", pid=PropertyId.STABILITY, status=MatrixStatus.NO_COUNTEREXAMPLE
        )
        matrix = SatisfactionMatrix(
            semantics=["qem"], properties=[PropertyId.STABILITY], cells=[cell]
        )
        assert matrix.cell("qem", PropertyId.STABILITY) is cell
        with pytest.raises(KeyError):
            matrix.cell("dfquad", PropertyId.STABILITY)
