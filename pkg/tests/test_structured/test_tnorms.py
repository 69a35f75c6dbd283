"""De Morgan 三元组与 T 范数语义测试。"""

import pytest

from gradualsemantics.parsing import load_sg
from gradualsemantics.structured.tnorm_semantics import eval_tnorm
from gradualsemantics.structured.tnorms import (
    TNORM_M,
    TNORM_P,
    DeMorganTriple,
    builtin_triples,
)


class TestDeMorganTriple:
    """DeMorganTriple 测试。"""

    @pytest.mark.parametrize("triple", [TNORM_P, TNORM_M])
    def test_builtin_triples_valid(self, triple):
        """测试内置三元组满足 De Morgan 律等性质。"""
        assert triple.violations() == []
        assert triple.is_valid()

    def test_broken_triple_detected(self):
        """测试不满足 De Morgan 律的三元组。"""
        broken = DeMorganTriple(
            name="broken", tnorm=lambda a, b: a * b, tconorm=max, negation=lambda a: 1.0 - a
        )
        assert not broken.is_valid()
        assert any("De Morgan" in problem for problem in broken.violations())

    def test_folds(self):
        """测试折叠与空序列的单位元。"""
        assert TNORM_P.conjoin([]) == 1.0
        assert TNORM_P.disjoin([]) == 0.0
        assert TNORM_P.conjoin([0.5, 0.4]) == pytest.approx(0.2)
        assert TNORM_P.disjoin([0.5, 0.4]) == pytest.approx(0.7)
        assert TNORM_M.conjoin([0.5, 0.4]) == 0.4
        assert TNORM_M.disjoin([0.5, 0.4]) == 0.5

    def test_registry(self):
        """测试内置三元组注册表。"""
        assert set(builtin_triples()) == {"tnorm-p", "tnorm-m"}


class TestEvalTNorm:
    """eval_tnorm 测试。"""

    def test_climate_product(self, climate_graph):
        """测试乘积 T 范数在气候辩论图上的强度。"""
        strengths = eval_tnorm(climate_graph, TNORM_P)
        assert strengths["a1"] == pytest.approx(0.432)
        assert strengths["a2"] == pytest.approx(0.9)
        assert strengths["a3"] == pytest.approx(0.6)
        assert strengths["a4"] == 0.0

    def test_climate_minimum(self, climate_graph):
        """测试最小值 T 范数在气候辩论图上的强度。"""
        strengths = eval_tnorm(climate_graph, TNORM_M)
        assert strengths["a1"] == pytest.approx(0.6)
        assert strengths["a4"] == 0.0

    def test_attack_by_supported_attacker(self):
        """测试有 CST 的攻击者削弱目标。"""
        graph = load_sg(
            "a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\n"
            "a4: d => ~a @ 0.7\na5: T => d @ 0.5\n"
        )
        strengths = eval_tnorm(graph, TNORM_P)
        attack = 0.7 * 0.5
        assert strengths["a4"] == pytest.approx(attack)
        assert strengths["a1"] == pytest.approx(0.432 * (1 - attack))

    def test_multiple_trees_disjoined(self):
        """测试多棵 CST 的结果以 T 余范数合并。"""
        graph = load_sg("a1: a => b @ 0.5\na2: T => a @ 0.4\na3: c => a @ 1\na4: T => c @ 0.5\n")
        strengths = eval_tnorm(graph, TNORM_P)
        first, second = 0.5 * 0.4, 0.5 * 1 * 0.5
        assert strengths["a1"] == pytest.approx(first + second - first * second)

    def test_empty_graph(self):
        """测试空图。"""
        assert eval_tnorm(load_sg(""), TNORM_P) == {}
