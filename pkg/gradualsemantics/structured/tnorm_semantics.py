"""T 范数语义。"""

import logging

from gradualsemantics.models.graph import CompleteSupportTree, StatementGraph
from gradualsemantics.structured.support_trees import all_csts
from gradualsemantics.structured.tnorms import DeMorganTriple

logger = logging.getLogger(__name__)


def eval_tnorm(
    graph: StatementGraph,
    triple: DeMorganTriple,
    trees: dict[str, list[CompleteSupportTree]] | None = None,
) -> dict[str, float]:
    """按 T 范数语义计算全部陈述的强度。

    I(T) 为成员权重的 ⊗；O(T) = I(T) ⊗ ¬(⊕ 攻击 T 的所有 CST T′ 的 I(T′))，
    T′ 可以属于图中任意陈述；σ(α) 为 α 的各 CST 的 O(T) 之 ⊕。折叠顺序按成员与
    树的排序键固定。

    Args:
        graph: 无环陈述图
        triple: De Morgan 三元组
        trees: 可选的预先枚举的 CST

    Returns:
        陈述 id → 强度
    """
    forest = trees if trees is not None else all_csts(graph)

    # I(T)，键为 (root, members)
    inner: dict[tuple[str, tuple[str, ...]], float] = {}
    for root in sorted(forest):
        for tree in forest[root]:
            inner[tree.sort_key] = triple.conjoin(graph.weights[m] for m in tree.members)

    # 按根的被攻击目标建立索引：attacker 根 → 其全部 CST
    attacking: dict[str, list[CompleteSupportTree]] = {}
    for source, _ in sorted(graph.attacks):
        if source not in attacking:
            attacking[source] = forest.get(source, [])

    strengths: dict[str, float] = {}
    for statement_id in graph.ids:
        outcomes: list[float] = []
        for tree in forest.get(statement_id, []):
            attackers = sorted(
                {
                    other.sort_key
                    for member in tree.members
                    for source in graph.attackers(member)
                    for other in attacking.get(source, [])
                }
            )
            attack = triple.disjoin(inner[key] for key in attackers)
            outcomes.append(triple.tnorm(inner[tree.sort_key], triple.negation(attack)))
        strengths[statement_id] = triple.disjoin(outcomes)
    logger.debug(f"{triple.name}: 已计算 {len(strengths)} 个陈述的强度")
    return strengths
