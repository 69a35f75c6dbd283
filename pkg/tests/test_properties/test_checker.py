"""性质定义、场景校验与性质检查测试。"""

import pytest

from gradualsemantics.models.properties import PropertyId, Scenario, VerdictStatus
from gradualsemantics.parsing import load_sg
from gradualsemantics.properties import (
    PROPERTIES,
    check_property,
    get_property,
    is_applicable,
    support_tree_condition,
    validate_scenario,
)
from gradualsemantics.registry import get_semantics
from gradualsemantics.structured.support_trees import all_csts
from gradualsemantics.utils.exceptions import MalformedScenarioError, UnknownPropertyError

ISOLATED = "a1: b => a @ 1\n"

# t4 的 CST {t3, t4} 攻击 t1 的 CST {t1, t2}
TREE_CONDITIONS = """\
t1: b => a @ 0.5
t2: T => b @ 0.5
t3: T => c @ 0.5
t4: c => ~b @ 0.5
"""


class TestDefinitions:
    """性质元数据测试。"""

    def test_all_properties_described(self):
        """测试每个性质都有描述。"""
        assert set(PROPERTIES) == set(PropertyId)
        assert len(PROPERTIES) == 17

    @pytest.mark.parametrize(
        "name", ["weak-provability", "weak_provability", "WeakProvability", " WEAK-PROVABILITY "]
    )
    def test_name_variants(self, name):
        """测试名称的不同写法。"""
        assert get_property(name).pid == PropertyId.WEAK_PROVABILITY

    def test_lookup_by_id(self):
        """测试按枚举获取。"""
        assert get_property(PropertyId.MIRRORING).label == "Mirroring"

    def test_unknown(self):
        """测试未知性质。"""
        with pytest.raises(UnknownPropertyError):
            get_property("transitivity")

    def test_applicability(self):
        """测试结构化性质不适用于抽象语义。"""
        assert is_applicable(PropertyId.STABILITY, get_semantics("dfquad"))
        assert not is_applicable(PropertyId.PROVABILITY, get_semantics("dfquad"))
        assert is_applicable(PropertyId.PROVABILITY, get_semantics("dc-qem"))


class TestValidateScenario:
    """结构前件校验测试。"""

    def test_stability_requires_isolated_target(self, climate_graph):
        """测试 stability 的目标不能有邻居。"""
        validate_scenario(PropertyId.STABILITY, Scenario.single(climate_graph, target="a4"))
        with pytest.raises(MalformedScenarioError):
            validate_scenario(PropertyId.STABILITY, Scenario.single(climate_graph, target="a1"))

    def test_missing_role(self, climate_graph):
        """测试缺少角色。"""
        with pytest.raises(MalformedScenarioError, match="缺少角色"):
            validate_scenario(PropertyId.STABILITY, Scenario.single(climate_graph, node="a4"))

    def test_wrong_kind(self, climate_graph):
        """测试场景类型不符。"""
        with pytest.raises(MalformedScenarioError):
            validate_scenario(
                PropertyId.NEUTRALITY, Scenario.single(climate_graph, added="a4", target="a1")
            )

    def test_unknown_focus(self, climate_graph):
        """测试焦点引用未知陈述。"""
        with pytest.raises(MalformedScenarioError):
            validate_scenario(PropertyId.STABILITY, Scenario.single(climate_graph, target="zz"))

    def test_weak_provability_needs_zero_weight(self, climate_graph):
        """测试 weak-provability 要求目标权重为 0。"""
        validate_scenario(PropertyId.PROVABILITY, Scenario.single(climate_graph, target="a4"))
        with pytest.raises(MalformedScenarioError):
            validate_scenario(
                PropertyId.WEAK_PROVABILITY, Scenario.single(climate_graph, target="a4")
            )

    def test_attacked_premise_requires_new_attacker(self, climate_graph):
        """测试 attacked-premise 要求恰好新增一个攻击者。"""
        after = load_sg(
            "a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\n"
            "a4: d => ~a @ 0.7\na5: e => b @ 0.5\n"
        )
        scenario = Scenario.pair(climate_graph, after, added="a5", target="a1")
        validate_scenario(PropertyId.SUPPORTED_PREMISE, scenario)
        with pytest.raises(MalformedScenarioError):
            validate_scenario(PropertyId.ATTACKED_PREMISE, scenario)

    def test_support_tree_condition(self):
        """测试基于 CST 的前件。"""
        graph = load_sg(TREE_CONDITIONS)
        forest = all_csts(graph)
        attack = PropertyId.ATTACK_MONOTONICITY
        support = PropertyId.SUPPORT_MONOTONICITY
        assert support_tree_condition(attack, graph, forest, "t3", "t1")
        assert support_tree_condition(attack, graph, forest, "t4", "t1")
        assert not support_tree_condition(attack, graph, forest, "t2", "t1")
        assert support_tree_condition(support, graph, forest, "t2", "t1")
        assert not support_tree_condition(support, graph, forest, "t3", "t1")
        assert not support_tree_condition(support, graph, forest, "t1", "t1")


class TestCheckProperty:
    """check_property 测试。"""

    def test_stability_violated_by_tnorm(self):
        """测试没有 CST 的孤立陈述在 T 范数语义下强度为 0。"""
        scenario = Scenario.single(load_sg(ISOLATED), target="a1")
        verdict = check_property(PropertyId.STABILITY, "tnorm-p", scenario)
        assert verdict.status == VerdictStatus.VIOLATED
        assert verdict.witness is not None
        assert verdict.witness.strengths == [{"a1": 0.0}]
        assert verdict.witness.clause == "σ(target) = τ(target)"

    @pytest.mark.parametrize("semantics", ["dc-dfquad", "dc-qem", "dfquad", "qem"])
    def test_stability_holds(self, semantics):
        """测试其他语义满足 stability。"""
        scenario = Scenario.single(load_sg(ISOLATED), target="a1")
        verdict = check_property(PropertyId.STABILITY, semantics, scenario)
        assert verdict.status == VerdictStatus.HOLDS
        assert not verdict.vacuous

    def test_provability(self, climate_graph):
        """测试 provability：T 范数成立，DC 违反，抽象语义不适用。"""
        scenario = Scenario.single(climate_graph, target="a4")
        assert check_property(PropertyId.PROVABILITY, "tnorm-p", scenario).status == (
            VerdictStatus.HOLDS
        )
        assert check_property(PropertyId.PROVABILITY, "dc-dfquad", scenario).status == (
            VerdictStatus.VIOLATED
        )
        assert check_property(PropertyId.PROVABILITY, "dfquad", scenario).status == (
            VerdictStatus.NOT_APPLICABLE
        )

    def test_directionality(self, climate_graph):
        """测试加入无关陈述不影响目标。"""
        after = load_sg(
            "a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\n"
            "a4: d => ~a @ 0.7\na5: T => e @ 0.4\n"
        )
        scenario = Scenario.pair(climate_graph, after, added="a5", target="a1")
        for name in ("tnorm-p", "dc-dfquad", "qem"):
            assert check_property(PropertyId.DIRECTIONALITY, name, scenario).status == (
                VerdictStatus.HOLDS
            )

    def test_neutrality_zero_supporter(self, climate_graph):
        """测试加入强度为 0 的支持者。"""
        after = load_sg(
            "a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\n"
            "a4: d => ~a @ 0.7\na5: T => d @ 0\n"
        )
        scenario = Scenario.pair(climate_graph, after, added="a5", target="a4")
        for name in ("tnorm-p", "dc-dfquad"):
            verdict = check_property(PropertyId.NEUTRALITY, name, scenario)
            assert verdict.status == VerdictStatus.HOLDS
            assert not verdict.vacuous

    def test_neutrality_vacuous(self, climate_graph):
        """测试新增陈述强度不为 0 时空真成立。"""
        after = load_sg(
            "a1: a & b => c @ 0.8\na2: T => a @ 0.9\na3: T => b @ 0.6\n"
            "a4: d => ~a @ 0.7\na5: T => d @ 0.5\n"
        )
        scenario = Scenario.pair(climate_graph, after, added="a5", target="a4")
        verdict = check_property(PropertyId.NEUTRALITY, "dc-dfquad", scenario)
        assert verdict.status == VerdictStatus.HOLDS
        assert verdict.vacuous

    def test_tolerance(self):
        """测试容差参数。"""
        scenario = Scenario.single(load_sg(ISOLATED), target="a1")
        verdict = check_property(PropertyId.STABILITY, "tnorm-p", scenario, tolerance=1.0)
        assert verdict.status == VerdictStatus.HOLDS

    def test_malformed_raises(self, climate_graph):
        """测试结构前件不满足时抛出异常。"""
        with pytest.raises(MalformedScenarioError):
            check_property(
                PropertyId.STABILITY, "dc-dfquad", Scenario.single(climate_graph, target="a1")
            )
