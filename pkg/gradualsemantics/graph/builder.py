"""陈述图的构造、校验与变换。"""

import logging
from collections.abc import Iterable, Mapping

import networkx as nx

from gradualsemantics.graph.relations import derive_relations
from gradualsemantics.models.graph import PathRelation, StatementGraph
from gradualsemantics.models.logic import Statement
from gradualsemantics.utils.exceptions import (
    CyclicGraphError,
    DuplicateStatementError,
    MissingWeightError,
    UnknownStatementError,
    WeightOutOfRangeError,
)

logger = logging.getLogger(__name__)


def build_graph(statements: Iterable[Statement], weights: Mapping[str, float]) -> StatementGraph:
    """构造并校验陈述图。

    Args:
        statements: 陈述集合
        weights: 每个陈述的权重，取值于 [0, 1]

    Returns:
        已推导关系、通过无环校验的 StatementGraph

    Raises:
        DuplicateStatementError: id 或结构键重复
        MissingWeightError: 缺少权重
        WeightOutOfRangeError: 权重不在 [0, 1]
        CyclicGraphError: A ∪ S 中存在环
    """
    items = sorted(statements, key=lambda s: s.id)
    seen_ids: set[str] = set()
    seen_keys: dict[object, str] = {}
    for statement in items:
        if statement.id in seen_ids:
            raise DuplicateStatementError(f"陈述 id 重复: {statement.id}")
        seen_ids.add(statement.id)
        if statement.key in seen_keys:
            raise DuplicateStatementError(
                f"陈述 {statement.id} 与 {seen_keys[statement.key]} 在逻辑上相同",
                {"statement": str(statement)},
            )
        seen_keys[statement.key] = statement.id

    resolved: dict[str, float] = {}
    for statement in items:
        if statement.id not in weights:
            raise MissingWeightError(f"陈述 {statement.id} 缺少权重")
        # 加 0.0 把 -0.0 归一为 0.0
        value = float(weights[statement.id]) + 0.0
        # 闭区间，不留容差
        if not 0.0 <= value <= 1.0:
            raise WeightOutOfRangeError(
                f"陈述 {statement.id} 的权重 {value} 不在 [0, 1] 内", {"weight": value}
            )
        resolved[statement.id] = value
    extra = set(weights) - seen_ids
    if extra:
        raise UnknownStatementError(f"权重引用了未知陈述: {sorted(extra)}")

    attacks, supports = derive_relations(items)
    graph = StatementGraph(
        statements=tuple(items), attacks=attacks, supports=supports, weights=resolved
    )
    _check_acyclic(graph)
    logger.debug(
        f"构造陈述图: {len(items)} 个陈述, {len(attacks)} 条攻击边, {len(supports)} 条支持边"
    )
    return graph


def _check_acyclic(graph: StatementGraph) -> None:
    try:
        cycle = nx.find_cycle(graph.digraph())
    except nx.NetworkXNoCycle:
        return
    path = [source for source, _ in cycle] + [cycle[0][0]]
    raise CyclicGraphError(path)


def exists_path(
    graph: StatementGraph,
    source: str,
    target: str,
    via: PathRelation = PathRelation.ANY,
) -> bool:
    """判断是否存在从 source 到 target 的非空有向路径。

    Args:
        graph: 陈述图
        source: 起点 id
        target: 终点 id
        via: 仅沿支持边，或沿攻击与支持边

    Returns:
        是否存在非空路径

    Raises:
        UnknownStatementError: id 不存在
    """
    graph.statement(source)
    graph.statement(target)
    if source == target:
        # 无环图中不存在到自身的非空路径
        return False
    if via == PathRelation.SUPPORTS:
        digraph = nx.DiGraph()
        digraph.add_nodes_from(graph.ids)
        digraph.add_edges_from(graph.supports)
    else:
        digraph = graph.digraph()
    return bool(nx.has_path(digraph, source, target))


def descendants(graph: StatementGraph, source: str) -> set[str]:
    """从 source 出发经 A ∪ S 可达的全部陈述。"""
    graph.statement(source)
    return set(nx.descendants(graph.digraph(), source))


def ancestors(graph: StatementGraph, target: str) -> set[str]:
    """经 A ∪ S 可达 target 的全部陈述。"""
    graph.statement(target)
    return set(nx.ancestors(graph.digraph(), target))


def support_ancestors(graph: StatementGraph, target: str) -> set[str]:
    """存在仅由支持边构成的路径到达 target 的陈述。"""
    graph.statement(target)
    digraph = nx.DiGraph()
    digraph.add_nodes_from(graph.ids)
    digraph.add_edges_from(graph.supports)
    return set(nx.ancestors(digraph, target))


def add_statement(graph: StatementGraph, statement: Statement, weight: float) -> StatementGraph:
    """返回加入一个新陈述后的图，原图不变。"""
    weights = dict(graph.weights)
    weights[statement.id] = weight
    return build_graph([*graph.statements, statement], weights)


def remove_statement(graph: StatementGraph, statement_id: str) -> StatementGraph:
    """返回删除一个陈述后的图，原图不变。"""
    graph.statement(statement_id)
    weights = {k: v for k, v in graph.weights.items() if k != statement_id}
    return build_graph([s for s in graph.statements if s.id != statement_id], weights)


def reweight(graph: StatementGraph, updates: Mapping[str, float]) -> StatementGraph:
    """返回修改部分权重后的图，原图不变。"""
    for statement_id in updates:
        graph.statement(statement_id)
    return build_graph(graph.statements, {**graph.weights, **updates})
