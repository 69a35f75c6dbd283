"""模块化结构语义与辩证合取（DC）语义。"""

import logging
from collections.abc import Callable

from gradualsemantics.abstract.evaluator import apply_abstract_to_sg, eval_abstract
from gradualsemantics.abstract.semantics import AbstractSemantics
from gradualsemantics.models.graph import StatementGraph
from gradualsemantics.modular.aggregators import PRODUCT, PremiseAggregator
from gradualsemantics.modular.premise_graph import LiteralBase, build_premise_graph, nth_root

logger = logging.getLogger(__name__)

EmptyPremiseRule = Callable[[StatementGraph, str], float]


def weight_rule(graph: StatementGraph, statement_id: str) -> float:
    """Prem(α) = ∅ 时 σ(α) = τ(α)。"""
    return graph.weights[statement_id]


def eval_modular(
    graph: StatementGraph,
    semantics: AbstractSemantics,
    aggregator: PremiseAggregator,
    literal_base: LiteralBase = nth_root,
    empty_premise: EmptyPremiseRule = weight_rule,
) -> dict[str, float]:
    """模块化结构语义。

    按拓扑序计算：先得到邻居强度，再构造前提图，用抽象语义为文字节点打分，最后以
    聚合函数折叠。备忘表只在本次求值内使用。

    Args:
        graph: 无环陈述图
        semantics: 给文字打分的抽象语义
        aggregator: 前提聚合函数 ⊙
        literal_base: 文字基础分数规则
        empty_premise: 前提为 ⊤ 时的强度规则

    Returns:
        陈述 id → 强度
    """
    strengths: dict[str, float] = {}
    for statement_id in graph.topological_order():
        if graph.statement(statement_id).is_fact:
            strengths[statement_id] = empty_premise(graph, statement_id)
            continue
        premise_graph = build_premise_graph(graph, statement_id, strengths, literal_base)
        scores = eval_abstract(premise_graph.to_bipolar(), semantics)
        strengths[statement_id] = aggregator.fold(
            [scores[node] for node in premise_graph.literal_ids]
        )
    logger.debug(
        f"模块化语义 ({semantics.name}, {aggregator.name}): 已计算 {len(strengths)} 个陈述"
    )
    return {sid: strengths[sid] for sid in graph.ids}


def eval_dc(graph: StatementGraph, semantics: AbstractSemantics) -> dict[str, float]:
    """辩证合取语义：文字基础分数为 τ 的 n 次方根，文字得分相乘。"""
    return eval_modular(graph, semantics, PRODUCT)


def collapse_gap(graph: StatementGraph, semantics: AbstractSemantics) -> float:
    """DC 语义与直接应用抽象语义之间的最大差值。

    所有前提至多含一个文字时二者应当一致。
    """
    dc = eval_dc(graph, semantics)
    flat = apply_abstract_to_sg(graph, semantics)
    return max((abs(dc[sid] - flat[sid]) for sid in graph.ids), default=0.0)


def literal_scores(
    graph: StatementGraph, statement_id: str, semantics: AbstractSemantics
) -> dict[str, float]:
    """DC 语义下焦点陈述各前提文字的得分（文字文本 → 得分）。"""
    strengths = eval_dc(graph, semantics)
    premise_graph = build_premise_graph(graph, statement_id, strengths)
    scores = eval_abstract(premise_graph.to_bipolar(), semantics)
    return {
        str(item): scores[node]
        for item, node in zip(premise_graph.literal_nodes, premise_graph.literal_ids, strict=True)
    }
