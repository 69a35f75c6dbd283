"""陈述图构造、路径查询与变换测试。"""

import math

import pytest

from gradualsemantics.graph.builder import (
    add_statement,
    ancestors,
    build_graph,
    descendants,
    exists_path,
    remove_statement,
    reweight,
    support_ancestors,
)
from gradualsemantics.models.graph import PathRelation, Relation
from gradualsemantics.models.logic import make_statement
from gradualsemantics.utils.exceptions import (
    CyclicGraphError,
    DuplicateStatementError,
    MissingWeightError,
    UnknownStatementError,
    WeightOutOfRangeError,
)


def _statements():
    return [
        make_statement("a1", ["a", "b"], "c"),
        make_statement("a2", ["T"], "a"),
        make_statement("a3", ["T"], "b"),
        make_statement("a4", ["d"], "~a"),
    ]


class TestBuildGraph:
    """build_graph 测试。"""

    def test_relations(self, climate_graph):
        """测试推导出的攻击与支持关系。"""
        assert climate_graph.supports == frozenset({("a2", "a1"), ("a3", "a1")})
        assert climate_graph.attacks == frozenset({("a4", "a1")})
        assert climate_graph.attackers("a1") == ("a4",)
        assert climate_graph.supporters("a1") == ("a2", "a3")
        assert climate_graph.neighbours("a1") == ("a2", "a3", "a4")
        assert climate_graph.neighbours("a4") == ()

    def test_statements_sorted_by_id(self):
        """测试陈述按 id 排序。"""
        graph = build_graph(list(reversed(_statements())), {f"a{i}": 0.5 for i in range(1, 5)})
        assert graph.ids == ("a1", "a2", "a3", "a4")
        assert len(graph) == 4
        assert "a3" in graph
        assert "a9" not in graph

    def test_input_order_irrelevant(self):
        """测试结果与输入顺序无关。"""
        weights = {f"a{i}": 0.5 for i in range(1, 5)}
        assert build_graph(_statements(), weights) == build_graph(
            list(reversed(_statements())), weights
        )

    def test_digraph_relation_labels(self, climate_graph):
        """测试 networkx 图上的关系标注。"""
        digraph = climate_graph.digraph()
        assert digraph.edges["a4", "a1"]["relation"] == Relation.ATTACK
        assert digraph.edges["a2", "a1"]["relation"] == Relation.SUPPORT

    def test_topological_order(self, climate_graph):
        """测试确定性的拓扑序。"""
        assert climate_graph.topological_order() == ["a2", "a3", "a4", "a1"]

    def test_duplicate_id(self):
        """测试重复 id。"""
        statements = [make_statement("a1", ["T"], "a"), make_statement("a1", ["T"], "b")]
        with pytest.raises(DuplicateStatementError):
            build_graph(statements, {"a1": 0.5})

    def test_duplicate_key(self):
        """测试逻辑上相同的陈述。"""
        statements = [make_statement("a1", ["b", "c"], "a"), make_statement("a2", ["c", "b"], "a")]
        with pytest.raises(DuplicateStatementError):
            build_graph(statements, {"a1": 0.5, "a2": 0.5})

    def test_missing_weight(self):
        """测试缺少权重。"""
        with pytest.raises(MissingWeightError):
            build_graph(_statements(), {"a1": 0.5})

    @pytest.mark.parametrize("weight", [-0.01, 1.0000001])
    def test_weight_out_of_range(self, weight):
        """测试权重越界。"""
        with pytest.raises(WeightOutOfRangeError):
            build_graph([make_statement("a1", ["T"], "a")], {"a1": weight})

    @pytest.mark.parametrize("weight", [0.0, 1.0])
    def test_weight_bounds_inclusive(self, weight):
        """测试闭区间端点合法。"""
        graph = build_graph([make_statement("a1", ["T"], "a")], {"a1": weight})
        assert graph.weight("a1") == weight

    def test_negative_zero_weight(self):
        """测试 -0.0 按 0.0 保存。"""
        graph = build_graph([make_statement("a1", ["T"], "a")], {"a1": -0.0})
        assert math.copysign(1.0, graph.weight("a1")) == 1.0
        assert math.copysign(1.0, reweight(graph, {"a1": -0.0}).weight("a1")) == 1.0

    def test_extra_weight(self):
        """测试权重引用未知陈述。"""
        with pytest.raises(UnknownStatementError):
            build_graph([make_statement("a1", ["T"], "a")], {"a1": 0.5, "a2": 0.5})

    def test_cycle(self):
        """测试有环图被拒绝。"""
        statements = [make_statement("a1", ["a"], "b"), make_statement("a2", ["b"], "a")]
        with pytest.raises(CyclicGraphError) as exc_info:
            build_graph(statements, {"a1": 0.5, "a2": 0.5})
        assert set(exc_info.value.cycle) == {"a1", "a2"}

    def test_self_attack_is_cycle(self):
        """测试攻击自身前提的陈述构成环。"""
        with pytest.raises(CyclicGraphError):
            build_graph([make_statement("a1", ["a"], "~a")], {"a1": 0.5})

    def test_empty_graph(self):
        """测试空图。"""
        graph = build_graph([], {})
        assert len(graph) == 0
        assert graph.topological_order() == []

    def test_unknown_statement_lookup(self, climate_graph):
        """测试查找未知陈述。"""
        with pytest.raises(UnknownStatementError):
            climate_graph.statement("a9")


class TestPaths:
    """路径查询测试。"""

    def test_exists_path(self, climate_graph):
        """测试任意关系路径。"""
        assert exists_path(climate_graph, "a4", "a1")
        assert not exists_path(climate_graph, "a1", "a4")
        assert not exists_path(climate_graph, "a1", "a1")

    def test_support_only_path(self, climate_graph):
        """测试仅沿支持边的路径。"""
        assert exists_path(climate_graph, "a2", "a1", via=PathRelation.SUPPORTS)
        assert not exists_path(climate_graph, "a4", "a1", via=PathRelation.SUPPORTS)

    def test_reachability_sets(self, climate_graph):
        """测试祖先与后代。"""
        assert descendants(climate_graph, "a2") == {"a1"}
        assert ancestors(climate_graph, "a1") == {"a2", "a3", "a4"}
        assert support_ancestors(climate_graph, "a1") == {"a2", "a3"}

    def test_unknown_endpoint(self, climate_graph):
        """测试路径端点未知。"""
        with pytest.raises(UnknownStatementError):
            exists_path(climate_graph, "a1", "zz")


class TestTransformations:
    """图变换测试。"""

    def test_add_statement(self, climate_graph):
        """测试加入陈述后关系更新，原图不变。"""
        after = add_statement(climate_graph, make_statement("a5", ["T"], "d"), 1.0)
        assert ("a5", "a4") in after.supports
        assert "a5" not in climate_graph

    def test_remove_statement(self, climate_graph):
        """测试删除陈述。"""
        after = remove_statement(climate_graph, "a4")
        assert after.attacks == frozenset()
        assert "a4" in climate_graph

    def test_reweight(self, climate_graph):
        """测试修改权重。"""
        after = reweight(climate_graph, {"a2": 0.1})
        assert after.weight("a2") == 0.1
        assert climate_graph.weight("a2") == 0.9

    def test_reweight_unknown(self, climate_graph):
        """测试修改未知陈述的权重。"""
        with pytest.raises(UnknownStatementError):
            reweight(climate_graph, {"zz": 0.1})
