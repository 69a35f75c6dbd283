"""由陈述推导攻击与支持关系。"""

from collections import defaultdict
from collections.abc import Iterable

from gradualsemantics.models.graph import Edge
from gradualsemantics.models.logic import Literal, Statement, negate


def derive_relations(
    statements: Iterable[Statement],
) -> tuple[frozenset[Edge], frozenset[Edge]]:
    """推导攻击与支持边。

    (α1, α2) ∈ S 当且仅当 claim(α1) ∈ Prem(α2)；(α1, α2) ∈ A 当且仅当
    ¬claim(α1) ∈ Prem(α2)。结果与输入顺序无关。

    Args:
        statements: 结构键两两不同的陈述

    Returns:
        (attacks, supports)
    """
    by_claim: dict[Literal, list[str]] = defaultdict(list)
    items = list(statements)
    for statement in items:
        by_claim[statement.claim].append(statement.id)

    attacks: set[Edge] = set()
    supports: set[Edge] = set()
    for statement in items:
        for literal in statement.prem:
            for source in by_claim.get(literal, ()):
                supports.add((source, statement.id))
            for source in by_claim.get(negate(literal), ()):
                attacks.add((source, statement.id))

    # 同一陈述不可能同时支持并攻击另一陈述（前提一致）
    assert not attacks & supports
    return frozenset(attacks), frozenset(supports)
