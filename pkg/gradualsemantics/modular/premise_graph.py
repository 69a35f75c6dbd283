"""前提图构造。"""

import math
from collections.abc import Callable, Mapping

from gradualsemantics.models.bipolar import PremiseGraph, literal_node
from gradualsemantics.models.graph import StatementGraph
from gradualsemantics.models.logic import negate
from gradualsemantics.utils.exceptions import MissingStrengthError, PremiseGraphError

LiteralBase = Callable[[float, int], float]


def nth_root(weight: float, n: int) -> float:
    """τ 的 n 次方根，0 精确映射为 0。

    Raises:
        ValueError: n < 1 或权重不在 [0, 1]
    """
    if n < 1:
        raise ValueError(f"n 必须 ≥ 1，实际为 {n}")
    if not 0.0 <= weight <= 1.0:
        raise ValueError(f"权重 {weight} 不在 [0, 1] 内")
    if weight == 0.0:
        return 0.0
    if n == 1:
        return weight
    return min(1.0, math.exp(math.log(weight) / n))


def build_premise_graph(
    graph: StatementGraph,
    statement_id: str,
    neighbor_strengths: Mapping[str, float],
    literal_base: LiteralBase = nth_root,
) -> PremiseGraph:
    """为焦点陈述构造前提图。

    文字节点的基础分数为 ``literal_base(τ(α), |Prem(α)|)``，邻居节点的基础分数为其在
    原图中的强度。邻居的结论等于某文字时支持该文字，等于其否定时攻击该文字。

    Args:
        graph: 陈述图
        statement_id: 焦点陈述 id
        neighbor_strengths: 覆盖 A(α) ∪ S(α) 的强度
        literal_base: 文字基础分数规则

    Raises:
        PremiseGraphError: Prem(α) 为空
        MissingStrengthError: 缺少邻居强度
    """
    statement = graph.statement(statement_id)
    literals = statement.prem
    if not literals:
        raise PremiseGraphError(f"陈述 {statement_id} 的前提为 ⊤，没有前提图")

    neighbours = graph.neighbours(statement_id)
    missing = [n for n in neighbours if n not in neighbor_strengths]
    if missing:
        raise MissingStrengthError(
            f"构造 {statement_id} 的前提图缺少邻居强度", {"missing": missing}
        )

    literal_score = literal_base(graph.weights[statement_id], len(literals))
    base = {literal_node(item): literal_score for item in literals}
    attack_edges: set[tuple[str, str]] = set()
    support_edges: set[tuple[str, str]] = set()
    for neighbour in neighbours:
        claim = graph.statement(neighbour).claim
        base[neighbour] = neighbor_strengths[neighbour]
        for item in literals:
            if claim == item:
                support_edges.add((neighbour, literal_node(item)))
            elif claim == negate(item):
                attack_edges.add((neighbour, literal_node(item)))

    return PremiseGraph(
        focus=statement_id,
        literal_nodes=literals,
        neighbor_nodes=neighbours,
        base=base,
        attack_edges=frozenset(attack_edges),
        support_edges=frozenset(support_edges),
    )
