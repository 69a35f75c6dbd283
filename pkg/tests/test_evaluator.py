"""GraphEvaluator 测试。"""

import json
import logging

import pytest

from gradualsemantics.evaluator import GraphEvaluator
from gradualsemantics.models.graph import Completeness
from gradualsemantics.utils.exceptions import SGParseError, UnknownSemanticsError


class TestGraphEvaluator:
    """GraphEvaluator 测试。"""

    def test_default_semantics_from_settings(self, monkeypatch):
        """测试默认语义取配置。"""
        assert GraphEvaluator().semantics.name == "dc-dfquad"
        monkeypatch.setenv("GRADUAL_DEFAULT_SEMANTICS", "qem")
        from gradualsemantics.config.settings import reset_settings

        reset_settings()
        assert GraphEvaluator().semantics.name == "qem"

    def test_unknown_semantics(self):
        """测试未知语义。"""
        with pytest.raises(UnknownSemanticsError):
            GraphEvaluator("h-categoriser")

    def test_evaluate_sorted(self, climate_text):
        """测试求值结果按 id 排序。"""
        evaluator = GraphEvaluator("tnorm-p")
        strengths = evaluator.evaluate_text(climate_text)
        assert list(strengths) == ["a1", "a2", "a3", "a4"]
        assert strengths["a1"] == pytest.approx(0.432)

    def test_evaluate_override(self, climate_graph):
        """测试单次调用覆盖语义。"""
        evaluator = GraphEvaluator("tnorm-p")
        assert evaluator.evaluate(climate_graph, "tnorm-m")["a1"] == pytest.approx(0.6)
        assert evaluator.evaluate(climate_graph)["a1"] == pytest.approx(0.432)

    def test_load_file(self, tmp_path, climate_text):
        """测试读取文件。"""
        path = tmp_path / "climate.sg"
        path.write_text(climate_text, encoding="utf-8")
        assert len(GraphEvaluator().load_file(path)) == 4

    def test_load_error(self):
        """测试解析错误。"""
        with pytest.raises(SGParseError):
            GraphEvaluator().load("a1 a => b")

    def test_classify(self, completeness_stages):
        """测试完备性分类的三个阶段。"""
        evaluator = GraphEvaluator()
        stages = [evaluator.classify(g)["p1"] for g in completeness_stages]
        assert stages == [
            Completeness.INCOMPLETE,
            Completeness.PARTIALLY_COMPLETE,
            Completeness.COMPLETE,
        ]

    def test_export_annotated(self, climate_graph):
        """测试导出时附带强度。"""
        evaluator = GraphEvaluator("tnorm-m")
        plain = json.loads(evaluator.export(climate_graph))
        assert "strength" not in plain["statements"][0]
        annotated = json.loads(evaluator.export(climate_graph, annotate=True))
        assert annotated["statements"][0]["strength"] == pytest.approx(0.6)

    def test_logs_steps(self, climate_text, caplog):
        """测试记录各步骤。"""
        caplog.set_level(logging.INFO, logger="gradualsemantics.evaluator")
        GraphEvaluator("qem").evaluate_text(climate_text)
        steps = [getattr(r, "step", None) for r in caplog.records]
        assert "parse" in steps
        assert "evaluate" in steps
