"""性质前件的结构校验。

这里只检查不依赖语义的条件（图的形状、权重、支持树）；依赖强度的条件在检查时
判断，未触发时判定为空真。
"""

from gradualsemantics.graph.builder import exists_path
from gradualsemantics.models.graph import CompleteSupportTree, StatementGraph
from gradualsemantics.models.logic import negate
from gradualsemantics.models.properties import PropertyId, Scenario
from gradualsemantics.properties.definitions import PROPERTIES
from gradualsemantics.structured.support_trees import all_csts, cst_attacks
from gradualsemantics.utils.exceptions import MalformedScenarioError

Forest = dict[str, list[CompleteSupportTree]]


def _fail(pid: PropertyId, message: str) -> None:
    raise MalformedScenarioError(f"{pid.value} 场景不合法: {message}", {"property": pid.value})


def _require(pid: PropertyId, condition: bool, message: str) -> None:
    if not condition:
        _fail(pid, message)


def _check_shared(pid: PropertyId, before: StatementGraph, after: StatementGraph) -> None:
    for sid in set(before.ids) & set(after.ids):
        _require(
            pid,
            before.statement(sid).key == after.statement(sid).key,
            f"陈述 {sid} 在 G 与 G′ 中内容不同",
        )


def _check_single_addition(pid: PropertyId, scenario: Scenario, added: str) -> None:
    before, after = scenario.before, scenario.after
    _require(pid, added not in before and added in after, f"{added} 必须只出现在 G′ 中")
    _require(pid, set(after.ids) == set(before.ids) | {added}, "X′ 必须等于 X ∪ {新增陈述}")


def _weights_equal_on(
    before: StatementGraph, after: StatementGraph, ids: set[str] | tuple[str, ...]
) -> bool:
    return all(before.weights[sid] == after.weights[sid] for sid in ids)


def _in_some_tree(trees: list[CompleteSupportTree], member: str) -> bool:
    return any(member in tree for tree in trees)


def _attacks_target_with(graph: StatementGraph, forest: Forest, member: str, target: str) -> bool:
    """除 target 外，是否有包含 member 的 CST 攻击 target 的某棵 CST。"""
    targets = forest[target]
    for root, trees in forest.items():
        if root == target:
            continue
        for tree in trees:
            if member in tree and any(
                cst_attacks(graph, tree, other, validate=False) for other in targets
            ):
                return True
    return False


def validate_scenario(pid: PropertyId, scenario: Scenario) -> None:
    """校验场景满足性质的结构前件。

    Args:
        pid: 性质
        scenario: 场景

    Raises:
        MalformedScenarioError: 结构前件不满足
    """
    info = PROPERTIES[pid]
    _require(pid, scenario.kind == info.kind, f"需要 {info.kind.value} 场景")
    for role in info.roles:
        _require(pid, role in scenario.focus, f"缺少角色 {role}")
    for role, sid in scenario.focus.items():
        _require(pid, any(sid in g for g in scenario.graphs), f"角色 {role} 引用了未知陈述 {sid}")
    if len(scenario.graphs) == 2:
        _check_shared(pid, scenario.before, scenario.after)
    _VALIDATORS[pid](pid, scenario)


def _directionality(pid: PropertyId, scenario: Scenario) -> None:
    before, after = scenario.before, scenario.after
    added, target = scenario.role("added"), scenario.role("target")
    _check_single_addition(pid, scenario, added)
    _require(pid, target in before, "target 必须属于 X")
    _require(pid, _weights_equal_on(before, after, before.ids), "τ′ 与 τ 在 X 上必须一致")
    old_edges = before.attacks | before.supports
    new_edges = after.attacks | after.supports
    _require(pid, old_edges <= new_edges, "G 的边必须保留在 G′ 中")
    _require(pid, all(added in edge for edge in new_edges - old_edges), "新边必须关联新增陈述")
    _require(pid, not exists_path(after, added, target), "新增陈述到 target 不能有路径")


def _rewriting(pid: PropertyId, scenario: Scenario) -> None:
    graph = scenario.before
    long_id, bridge_id, short_id = (scenario.role(r) for r in ("long", "bridge", "short"))
    _require(pid, len({long_id, bridge_id, short_id}) == 3, "三个角色必须是不同陈述")
    long_s, bridge, short = (graph.statement(s) for s in (long_id, bridge_id, short_id))
    _require(pid, long_s.claim == short.claim, "long 与 short 的结论必须相同")
    fresh = bridge.claim
    _require(pid, fresh in short.prem and len(short.prem) == 2, "short 的前提必须为 x′ ∧ y")
    (rest,) = [item for item in short.prem if item != fresh]
    _require(pid, rest in long_s.prem, "short 的另一文字必须属于 long 的前提")
    _require(
        pid,
        set(bridge.prem) == set(long_s.prem) - {rest},
        "bridge 的前提必须等于 long 的前提去掉 y",
    )
    for other in graph.statements:
        if other.id in (bridge_id, short_id):
            continue
        _require(
            pid,
            other.claim.atom != fresh.atom and all(i.atom != fresh.atom for i in other.prem),
            f"原子 {fresh.atom} 只能出现在 bridge 与 short 中",
        )
    _require(pid, graph.weights[long_id] == graph.weights[short_id], "τ(long) 必须等于 τ(short)")
    _require(pid, graph.weights[bridge_id] == 1.0, "τ(bridge) 必须为 1")


def _provability(pid: PropertyId, scenario: Scenario) -> None:
    graph = scenario.before
    statement = graph.statement(scenario.role("target"))
    claims = {s.claim for s in graph.statements}
    _require(
        pid, any(item not in claims for item in statement.prem), "target 必须有无支持的前提文字"
    )
    if pid == PropertyId.WEAK_PROVABILITY:
        _require(pid, graph.weights[statement.id] == 0.0, "τ(target) 必须为 0")


def _stability(pid: PropertyId, scenario: Scenario) -> None:
    graph = scenario.before
    target = scenario.role("target")
    _require(pid, not graph.neighbours(target), "target 不能有攻击者或支持者")


def _addition_to_neighbourhood(pid: PropertyId, scenario: Scenario) -> None:
    before, after = scenario.before, scenario.after
    added, target = scenario.role("added"), scenario.role("target")
    _check_single_addition(pid, scenario, added)
    _require(pid, target in before, "target 必须属于 X")
    _require(pid, before.weights[target] == after.weights[target], "τ′(target) 必须等于 τ(target)")
    old_att, old_sup = set(before.attackers(target)), set(before.supporters(target))
    new_att, new_sup = set(after.attackers(target)), set(after.supporters(target))
    if pid == PropertyId.NEUTRALITY:
        _require(pid, new_att | new_sup == old_att | old_sup | {added}, "邻居必须恰好新增 added")
    elif pid == PropertyId.ATTACKED_PREMISE:
        _require(pid, new_att == old_att | {added} and new_sup == old_sup, "必须恰好新增攻击者")
    else:
        _require(pid, new_sup == old_sup | {added} and new_att == old_att, "必须恰好新增支持者")


def _changed_neighbour(pid: PropertyId, scenario: Scenario) -> None:
    before, after = scenario.before, scenario.after
    target, changed = scenario.role("target"), scenario.role("changed")
    _require(pid, target in before and target in after, "target 必须同时属于 X 与 X′")
    _require(pid, before.weights[target] == after.weights[target], "τ′(target) 必须等于 τ(target)")
    _require(pid, before.attackers(target) == after.attackers(target), "A′(target) 必须等于 A(target)")
    _require(
        pid, before.supporters(target) == after.supporters(target), "S′(target) 必须等于 S(target)"
    )
    pool = (
        before.attackers(target)
        if pid == PropertyId.WEAKENED_PREMISE
        else before.supporters(target)
    )
    _require(pid, changed in pool, "changed 必须是 target 的对应邻居")


def _bottom_strength(pid: PropertyId, scenario: Scenario) -> None:
    graph = scenario.before
    target = scenario.role("target")
    _require(pid, bool(graph.statement(target).prem), "target 的前提不能为 ⊤")
    _require(pid, bool(graph.attackers(target)), "target 必须有攻击者")


def _top_strength(pid: PropertyId, scenario: Scenario) -> None:
    graph = scenario.before
    statement = graph.statement(scenario.role("target"))
    _require(pid, bool(statement.prem), "target 的前提不能为 ⊤")
    claims = {graph.statement(s).claim for s in graph.supporters(statement.id)}
    _require(pid, all(item in claims for item in statement.prem), "每个前提文字都必须有支持者")


def _mirroring(pid: PropertyId, scenario: Scenario) -> None:
    graph = scenario.before
    first, second = scenario.role("first"), scenario.role("second")
    _require(pid, first != second, "first 与 second 必须不同")
    p1, p2 = graph.statement(first).prem, graph.statement(second).prem
    _require(pid, len(p1) == len(p2) == 1, "只支持单文字前提")
    _require(pid, p2[0] == negate(p1[0]), "两个前提必须互为否定")
    _require(
        pid,
        graph.weights[first] == graph.weights[second] == 0.5,
        "τ(first) 与 τ(second) 必须为 0.5",
    )


def _reinforcement(pid: PropertyId, scenario: Scenario) -> None:
    before, after = scenario.before, scenario.after
    raised, target = scenario.role("raised"), scenario.role("target")
    _require(pid, raised != target, "raised 与 target 必须不同")
    _require(pid, set(before.ids) == set(after.ids), "X′ 必须等于 X")
    others = tuple(sid for sid in before.ids if sid != raised)
    _require(pid, _weights_equal_on(before, after, others), "只有 raised 的权重可以变化")
    _require(pid, after.weights[raised] >= before.weights[raised], "τ′(raised) 不能小于 τ(raised)")
    _support_tree_conditions(pid, before, all_csts(before), raised, target)


def _monotonicity(pid: PropertyId, scenario: Scenario) -> None:
    before, after = scenario.before, scenario.after
    added, target = scenario.role("added"), scenario.role("target")
    _check_single_addition(pid, scenario, added)
    _require(pid, target in before, "target 必须属于 X")
    _require(pid, _weights_equal_on(before, after, before.ids), "τ′ 与 τ 在 X 上必须一致")
    _support_tree_conditions(pid, after, all_csts(after), added, target)


ATTACK_SIDE = (PropertyId.ATTACK_REINFORCEMENT, PropertyId.ATTACK_MONOTONICITY)


def support_tree_condition(
    pid: PropertyId, graph: StatementGraph, forest: Forest, member: str, target: str
) -> bool:
    """member 与 target 是否满足基于 CST 的前件。

    攻击一侧：member 不属于 target 的任何 CST，且存在包含 member 并攻击 target 某棵
    CST 的 CST。支持一侧：member 属于 target 的某棵 CST，且不存在这样的攻击 CST。
    """
    if member == target:
        return False
    in_target_tree = _in_some_tree(forest[target], member)
    attacking = _attacks_target_with(graph, forest, member, target)
    if pid in ATTACK_SIDE:
        return not in_target_tree and attacking
    return in_target_tree and not attacking


def _support_tree_conditions(
    pid: PropertyId, graph: StatementGraph, forest: Forest, member: str, target: str
) -> None:
    _require(
        pid,
        support_tree_condition(pid, graph, forest, member, target),
        f"{member} 与 target 不满足 CST 条件",
    )


_VALIDATORS = {
    PropertyId.DIRECTIONALITY: _directionality,
    PropertyId.REWRITING: _rewriting,
    PropertyId.PROVABILITY: _provability,
    PropertyId.WEAK_PROVABILITY: _provability,
    PropertyId.STABILITY: _stability,
    PropertyId.NEUTRALITY: _addition_to_neighbourhood,
    PropertyId.ATTACKED_PREMISE: _addition_to_neighbourhood,
    PropertyId.SUPPORTED_PREMISE: _addition_to_neighbourhood,
    PropertyId.WEAKENED_PREMISE: _changed_neighbour,
    PropertyId.STRENGTHENED_PREMISE: _changed_neighbour,
    PropertyId.BOTTOM_STRENGTH_PREMISE: _bottom_strength,
    PropertyId.TOP_STRENGTH_PREMISES: _top_strength,
    PropertyId.MIRRORING: _mirroring,
    PropertyId.ATTACK_REINFORCEMENT: _reinforcement,
    PropertyId.SUPPORT_REINFORCEMENT: _reinforcement,
    PropertyId.ATTACK_MONOTONICITY: _monotonicity,
    PropertyId.SUPPORT_MONOTONICITY: _monotonicity,
}
