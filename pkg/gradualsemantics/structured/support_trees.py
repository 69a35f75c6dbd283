"""完全支持树（CST）的枚举、攻击判定与完备性分类。"""

import itertools
import logging
from collections import defaultdict

from gradualsemantics.config.settings import get_settings
from gradualsemantics.graph.builder import support_ancestors
from gradualsemantics.models.graph import Completeness, CompleteSupportTree, StatementGraph
from gradualsemantics.models.logic import Literal
from gradualsemantics.utils.exceptions import CSTLimitExceededError, InvalidSupportTreeError

logger = logging.getLogger(__name__)


def _claims_index(graph: StatementGraph) -> dict[Literal, tuple[str, ...]]:
    index: dict[Literal, list[str]] = defaultdict(list)
    for statement in graph.statements:
        index[statement.claim].append(statement.id)
    return {claim: tuple(sorted(ids)) for claim, ids in index.items()}


def _conflicting(graph: StatementGraph, members: frozenset[str], newcomer: str) -> bool:
    for other in members:
        if (newcomer, other) in graph.attacks or (other, newcomer) in graph.attacks:
            return True
    return False


def enumerate_csts(
    graph: StatementGraph,
    statement_id: str,
    cap: int | None = None,
) -> list[CompleteSupportTree]:
    """枚举某陈述的全部完全支持树。

    对每个成员的每个未满足前提文字选择一个支持者，按集合去重；出现内部攻击的分支
    立即剪枝（冲突集合的超集仍冲突），最后删除严格包含其他结果的集合。

    Args:
        graph: 无环陈述图
        statement_id: 根陈述 id
        cap: 生成集合数量上限，默认取配置 ``cst_cap``

    Returns:
        按成员排序的 CST 列表

    Raises:
        UnknownStatementError: id 不存在
        CSTLimitExceededError: 生成数量超过上限
    """
    graph.statement(statement_id)
    limit = cap if cap is not None else get_settings().cst_cap
    claims = _claims_index(graph)
    found: set[frozenset[str]] = set()
    generated = 0

    # 深度优先：状态为 (成员集合, 待满足的 (成员, 文字) 队列)
    stack: list[tuple[frozenset[str], tuple[Literal, ...]]] = [
        (frozenset({statement_id}), graph.statement(statement_id).prem)
    ]
    while stack:
        members, pending = stack.pop()
        while pending and any(
            graph.statement(m).claim == pending[0] for m in members
        ):
            pending = pending[1:]
        if not pending:
            generated += 1
            if generated > limit:
                raise CSTLimitExceededError(
                    f"陈述 {statement_id} 的支持树数量超过上限 {limit}",
                    {"statement": statement_id, "cap": limit},
                )
            found.add(members)
            continue
        literal, rest = pending[0], pending[1:]
        for supporter in reversed(claims.get(literal, ())):
            if _conflicting(graph, members, supporter):
                continue
            stack.append((members | {supporter}, rest + graph.statement(supporter).prem))

    minimal = [tree for tree in found if not any(other < tree for other in found)]
    trees = sorted(
        (CompleteSupportTree.of(statement_id, tree) for tree in minimal),
        key=lambda t: t.members,
    )
    logger.debug(f"陈述 {statement_id}: 生成 {generated} 个候选，保留 {len(trees)} 棵 CST")
    return trees


def all_csts(
    graph: StatementGraph, cap: int | None = None
) -> dict[str, list[CompleteSupportTree]]:
    """枚举图中每个陈述的 CST。"""
    return {sid: enumerate_csts(graph, sid, cap) for sid in graph.ids}


def _is_closed(graph: StatementGraph, members: frozenset[str]) -> bool:
    claims = {graph.statement(m).claim for m in members}
    return all(
        literal in claims for m in members for literal in graph.statement(m).prem
    )


def _is_conflict_free(graph: StatementGraph, members: frozenset[str]) -> bool:
    return not any(
        (a, b) in graph.attacks for a in members for b in members
    )


def brute_force_csts(graph: StatementGraph, statement_id: str) -> list[CompleteSupportTree]:
    """按定义逐一检查全部子集的 CST 枚举，仅适用于小图（测试与调试用）。

    Args:
        graph: 陈述图
        statement_id: 根陈述 id

    Returns:
        按成员排序的 CST 列表
    """
    graph.statement(statement_id)
    others = [sid for sid in graph.ids if sid != statement_id]
    candidates: list[frozenset[str]] = []
    for size in range(len(others) + 1):
        for combo in itertools.combinations(others, size):
            members = frozenset((statement_id, *combo))
            if _is_closed(graph, members) and _is_conflict_free(graph, members):
                candidates.append(members)
    minimal = [c for c in candidates if not any(other < c for other in candidates)]
    return sorted(
        (CompleteSupportTree.of(statement_id, members) for members in minimal),
        key=lambda t: t.members,
    )


def _require_cst(graph: StatementGraph, tree: CompleteSupportTree) -> None:
    if tree.root not in tree.members or tree not in enumerate_csts(graph, tree.root):
        raise InvalidSupportTreeError(
            f"{tree} 不是 {tree.root} 的完全支持树", {"root": tree.root}
        )


def cst_attacks(
    graph: StatementGraph,
    attacker: CompleteSupportTree,
    target: CompleteSupportTree,
    validate: bool = True,
) -> bool:
    """判断 CST ``attacker`` 是否攻击 CST ``target``。

    当且仅当 attacker 的根攻击 target 的某个成员。

    Raises:
        InvalidSupportTreeError: 输入不是 CST（``validate`` 为真时检查）
    """
    if validate:
        _require_cst(graph, attacker)
        _require_cst(graph, target)
    return any((attacker.root, member) in graph.attacks for member in target.members)


def classify_completeness(
    graph: StatementGraph,
    statement_id: str,
    trees: dict[str, list[CompleteSupportTree]] | None = None,
) -> Completeness:
    """完备性分类。

    Complete：α 及所有经支持路径可达 α 的陈述都至少有一棵 CST；
    PartiallyComplete：α 有 CST 但不完备；Incomplete：α 没有 CST。

    Args:
        graph: 陈述图
        statement_id: 陈述 id
        trees: 可选的预先枚举结果
    """
    graph.statement(statement_id)

    def has_tree(sid: str) -> bool:
        if trees is not None and sid in trees:
            return bool(trees[sid])
        return bool(enumerate_csts(graph, sid))

    if not has_tree(statement_id):
        return Completeness.INCOMPLETE
    if all(has_tree(sid) for sid in support_ancestors(graph, statement_id)):
        return Completeness.COMPLETE
    return Completeness.PARTIALLY_COMPLETE
