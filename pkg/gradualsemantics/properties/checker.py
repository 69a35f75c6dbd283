"""性质检查：对一个场景求值并判定性质是否成立。"""

import logging
from collections.abc import Callable

from gradualsemantics.config.settings import get_settings
from gradualsemantics.models.graph import StatementGraph
from gradualsemantics.models.logic import Literal, negate
from gradualsemantics.models.properties import (
    PropertyId,
    PropertyVerdict,
    PropertyWitness,
    Scenario,
    VerdictStatus,
)
from gradualsemantics.properties.definitions import PROPERTIES, is_applicable
from gradualsemantics.properties.validators import validate_scenario
from gradualsemantics.registry import NamedSemantics, get_semantics

logger = logging.getLogger(__name__)

Strengths = list[dict[str, float]]


class _Outcome:
    """单次判定的中间结果。"""

    __slots__ = ("holds", "vacuous", "detail")

    def __init__(self, holds: bool, detail: str, vacuous: bool = False) -> None:
        self.holds = holds
        self.vacuous = vacuous
        self.detail = detail


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _equal(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol


def _vacuous(reason: str) -> _Outcome:
    return _Outcome(True, f"前件未触发: {reason}", vacuous=True)


def _compare(before: float, after: float, relation: str, tol: float) -> _Outcome:
    detail = f"σ(target)={_fmt(before)}, σ′(target)={_fmt(after)}"
    if relation == "=":
        return _Outcome(_equal(before, after, tol), detail)
    if relation == "<=":
        return _Outcome(after <= before + tol, detail)
    return _Outcome(after + tol >= before, detail)


def _neighbours_unchanged(
    graph: StatementGraph, strengths: Strengths, target: str, tol: float, skip: str | None = None
) -> bool:
    return all(
        _equal(strengths[0][n], strengths[1][n], tol)
        for n in graph.neighbours(target)
        if n != skip
    )


def _target_relation(relation: str) -> Callable[[Scenario, Strengths, float], _Outcome]:
    def check(s: Scenario, st: Strengths, tol: float) -> _Outcome:
        target = s.role("target")
        return _compare(st[0][target], st[1][target], relation, tol)

    return check


def _rewriting(s: Scenario, st: Strengths, tol: float) -> _Outcome:
    long_v, short_v = st[0][s.role("long")], st[0][s.role("short")]
    return _Outcome(
        _equal(long_v, short_v, tol), f"σ(long)={_fmt(long_v)}, σ(short)={_fmt(short_v)}"
    )


def _zero(s: Scenario, st: Strengths, tol: float) -> _Outcome:
    value = st[0][s.role("target")]
    return _Outcome(_equal(value, 0.0, tol), f"σ(target)={_fmt(value)}")


def _stability(s: Scenario, st: Strengths, tol: float) -> _Outcome:
    target = s.role("target")
    weight, value = s.before.weights[target], st[0][target]
    detail = f"τ(target)={_fmt(weight)}, σ(target)={_fmt(value)}"
    return _Outcome(_equal(value, weight, tol), detail)


def _neutrality(s: Scenario, st: Strengths, tol: float) -> _Outcome:
    added, target = s.role("added"), s.role("target")
    if not _equal(st[1][added], 0.0, tol):
        return _vacuous(f"σ′(added)={_fmt(st[1][added])} ≠ 0")
    if not _neighbours_unchanged(s.before, st, target, tol):
        return _vacuous("原有邻居的强度发生变化")
    return _compare(st[0][target], st[1][target], "=", tol)


def _premise_change(relation: str) -> Callable[[Scenario, Strengths, float], _Outcome]:
    def check(s: Scenario, st: Strengths, tol: float) -> _Outcome:
        target = s.role("target")
        if not _neighbours_unchanged(s.before, st, target, tol):
            return _vacuous("原有邻居的强度发生变化")
        return _compare(st[0][target], st[1][target], relation, tol)

    return check


def _changed_neighbour(relation: str) -> Callable[[Scenario, Strengths, float], _Outcome]:
    def check(s: Scenario, st: Strengths, tol: float) -> _Outcome:
        target, changed = s.role("target"), s.role("changed")
        if st[1][changed] - st[0][changed] <= tol:
            return _vacuous(f"σ′(changed)={_fmt(st[1][changed])} 未严格大于 σ(changed)")
        if not _neighbours_unchanged(s.before, st, target, tol, skip=changed):
            return _vacuous("其余邻居的强度发生变化")
        return _compare(st[0][target], st[1][target], relation, tol)

    return check


def _literal_neighbours(
    graph: StatementGraph, sid: str, item: Literal
) -> tuple[list[str], list[str]]:
    """针对前提文字 item 的攻击者与支持者。"""
    attackers = [a for a in graph.attackers(sid) if graph.statement(a).claim == negate(item)]
    supporters = [b for b in graph.supporters(sid) if graph.statement(b).claim == item]
    return attackers, supporters


def _bottom_strength(s: Scenario, st: Strengths, tol: float) -> _Outcome:
    graph, strengths = s.before, st[0]
    statement = graph.statement(s.role("target"))
    triggered = False
    for item in statement.prem:
        attackers, supporters = _literal_neighbours(graph, statement.id, item)
        if any(_equal(strengths[a], 1.0, tol) for a in attackers) and all(
            strengths[b] <= tol for b in supporters
        ):
            triggered = True
            break
    if not triggered:
        return _vacuous("没有被完全击败且无支持的前提文字")
    return _zero(s, st, tol)


def _top_strength(s: Scenario, st: Strengths, tol: float) -> _Outcome:
    graph, strengths = s.before, st[0]
    statement = graph.statement(s.role("target"))
    for item in statement.prem:
        attackers, supporters = _literal_neighbours(graph, statement.id, item)
        if any(strengths[a] > tol for a in attackers):
            return _vacuous(f"文字 {item} 的攻击者强度大于 0")
        if not any(_equal(strengths[b], 1.0, tol) for b in supporters):
            return _vacuous(f"文字 {item} 没有强度为 1 的支持者")
    value = strengths[statement.id]
    return _Outcome(_equal(value, 1.0, tol), f"σ(target)={_fmt(value)}")


def _mirroring(s: Scenario, st: Strengths, tol: float) -> _Outcome:
    first, second = st[0][s.role("first")], st[0][s.role("second")]
    return _Outcome(
        _equal(first, 1.0 - second, tol), f"σ(first)={_fmt(first)}, σ(second)={_fmt(second)}"
    )


_CHECKS: dict[PropertyId, Callable[[Scenario, Strengths, float], _Outcome]] = {
    PropertyId.DIRECTIONALITY: _target_relation("="),
    PropertyId.REWRITING: _rewriting,
    PropertyId.PROVABILITY: _zero,
    PropertyId.WEAK_PROVABILITY: _zero,
    PropertyId.STABILITY: _stability,
    PropertyId.NEUTRALITY: _neutrality,
    PropertyId.ATTACKED_PREMISE: _premise_change("<="),
    PropertyId.SUPPORTED_PREMISE: _premise_change(">="),
    PropertyId.WEAKENED_PREMISE: _changed_neighbour("<="),
    PropertyId.STRENGTHENED_PREMISE: _changed_neighbour(">="),
    PropertyId.BOTTOM_STRENGTH_PREMISE: _bottom_strength,
    PropertyId.TOP_STRENGTH_PREMISES: _top_strength,
    PropertyId.MIRRORING: _mirroring,
    PropertyId.ATTACK_REINFORCEMENT: _target_relation("<="),
    PropertyId.SUPPORT_REINFORCEMENT: _target_relation(">="),
    PropertyId.ATTACK_MONOTONICITY: _target_relation("<="),
    PropertyId.SUPPORT_MONOTONICITY: _target_relation(">="),
}


def check_property(
    pid: PropertyId,
    semantics: NamedSemantics | str,
    scenario: Scenario,
    tolerance: float | None = None,
) -> PropertyVerdict:
    """检查语义在场景上是否满足性质。

    结构前件不满足时抛出异常；依赖强度的前件未触发时判定为成立并标记 ``vacuous``。

    Args:
        pid: 性质
        semantics: 语义或其名称
        scenario: 场景
        tolerance: 相等判定容差，默认取配置中的 ``tolerance``

    Returns:
        PropertyVerdict: 判定结果

    Raises:
        MalformedScenarioError: 场景不满足结构前件
        UnknownSemanticsError: 语义名称未知
    """
    sem = get_semantics(semantics) if isinstance(semantics, str) else semantics
    if not is_applicable(pid, sem):
        return PropertyVerdict(
            pid=pid,
            semantics=sem.name,
            status=VerdictStatus.NOT_APPLICABLE,
            detail="抽象语义不检查陈述内部结构",
        )
    tol = get_settings().tolerance if tolerance is None else tolerance
    validate_scenario(pid, scenario)
    strengths = [sem.evaluate(graph) for graph in scenario.graphs]
    outcome = _CHECKS[pid](scenario, strengths, tol)
    logger.debug(f"{pid.value}/{sem.name}: holds={outcome.holds} {outcome.detail}")
    if outcome.holds:
        return PropertyVerdict(
            pid=pid,
            semantics=sem.name,
            status=VerdictStatus.HOLDS,
            vacuous=outcome.vacuous,
            detail=outcome.detail,
        )
    return PropertyVerdict(
        pid=pid,
        semantics=sem.name,
        status=VerdictStatus.VIOLATED,
        detail=outcome.detail,
        witness=PropertyWitness(
            scenario=scenario, strengths=strengths, clause=PROPERTIES[pid].clause
        ),
    )
