"""双极无环图上的拓扑序求值。"""

import logging

import networkx as nx

from gradualsemantics.abstract.semantics import AbstractSemantics
from gradualsemantics.models.bipolar import BipolarEvalGraph
from gradualsemantics.models.graph import StatementGraph
from gradualsemantics.utils.exceptions import CyclicGraphError

logger = logging.getLogger(__name__)


def eval_abstract(graph: BipolarEvalGraph, semantics: AbstractSemantics) -> dict[str, float]:
    """按拓扑序计算每个节点的得分。

    Args:
        graph: 加权双极无环图
        semantics: 抽象语义

    Returns:
        节点 id → 得分

    Raises:
        CyclicGraphError: 图中存在环
    """
    digraph = graph.digraph()
    try:
        order = list(nx.lexicographical_topological_sort(digraph))
    except nx.NetworkXUnfeasible:
        cycle = nx.find_cycle(digraph)
        raise CyclicGraphError([source for source, _ in cycle] + [cycle[0][0]]) from None

    attackers: dict[str, list[str]] = {node: [] for node in graph.nodes}
    supporters: dict[str, list[str]] = {node: [] for node in graph.nodes}
    for source, target in graph.attack_edges:
        attackers[target].append(source)
    for source, target in graph.support_edges:
        supporters[target].append(source)

    scores: dict[str, float] = {}
    for node in order:
        scores[node] = semantics.evaluate(
            graph.base[node],
            [scores[a] for a in sorted(attackers[node])],
            [scores[s] for s in sorted(supporters[node])],
        )
    return scores


def statement_graph_to_bipolar(graph: StatementGraph) -> BipolarEvalGraph:
    """把陈述视为原子节点：节点为陈述，基础分数为 τ。"""
    return BipolarEvalGraph(
        nodes=graph.ids,
        base=dict(graph.weights),
        attack_edges=graph.attacks,
        support_edges=graph.supports,
    )


def apply_abstract_to_sg(graph: StatementGraph, semantics: AbstractSemantics) -> dict[str, float]:
    """把抽象语义直接应用于陈述图。"""
    scores = eval_abstract(statement_graph_to_bipolar(graph), semantics)
    logger.debug(f"{semantics.name}: 已计算 {len(scores)} 个陈述的强度")
    return {sid: scores[sid] for sid in graph.ids}
