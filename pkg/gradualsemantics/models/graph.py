"""陈述图、完全支持树与完备性分类的数据模型。"""

from enum import Enum
from typing import Any

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from gradualsemantics.models.logic import Statement
from gradualsemantics.utils.exceptions import UnknownStatementError

Edge = tuple[str, str]


class Relation(str, Enum):
    """边的关系类型。"""

    ATTACK = "attack"
    SUPPORT = "support"


class PathRelation(str, Enum):
    """路径查询所使用的关系集合。"""

    SUPPORTS = "supports"
    ANY = "any"


class StatementGraph(BaseModel):
    """陈述图 ⟨X, A, S, τ⟩。

    请通过 ``gradualsemantics.graph.build_graph`` 构造：它推导关系并校验无环性与权重。
    构造后不可变，可在并发求值间只读共享。
    """

    statements: tuple[Statement, ...] = Field(default=(), description="按 id 排序的陈述")
    attacks: frozenset[Edge] = Field(default=frozenset(), description="攻击边 (攻击者, 被攻击者)")
    supports: frozenset[Edge] = Field(default=frozenset(), description="支持边 (支持者, 被支持者)")
    weights: dict[str, float] = Field(default_factory=dict, description="权重 τ")

    model_config = ConfigDict(frozen=True)

    _index: dict[str, Statement] | None = PrivateAttr(default=None)
    _attackers: dict[str, tuple[str, ...]] | None = PrivateAttr(default=None)
    _supporters: dict[str, tuple[str, ...]] | None = PrivateAttr(default=None)
    _digraph: Any = PrivateAttr(default=None)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StatementGraph):
            return NotImplemented
        return (
            self.statements == other.statements
            and self.attacks == other.attacks
            and self.supports == other.supports
            and self.weights == other.weights
        )

    __hash__ = None  # type: ignore[assignment]

    def __len__(self) -> int:
        return len(self.statements)

    def __contains__(self, statement_id: object) -> bool:
        return statement_id in self.index

    @property
    def index(self) -> dict[str, Statement]:
        if self._index is None:
            self._index = {s.id: s for s in self.statements}
        return self._index

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(s.id for s in self.statements)

    def statement(self, statement_id: str) -> Statement:
        """按 id 获取陈述。

        Raises:
            UnknownStatementError: id 不存在
        """
        try:
            return self.index[statement_id]
        except KeyError:
            raise UnknownStatementError(f"未知陈述: {statement_id}") from None

    def weight(self, statement_id: str) -> float:
        self.statement(statement_id)
        return self.weights[statement_id]

    def _build_neighbours(self) -> None:
        attackers: dict[str, list[str]] = {sid: [] for sid in self.index}
        supporters: dict[str, list[str]] = {sid: [] for sid in self.index}
        for source, target in self.attacks:
            attackers[target].append(source)
        for source, target in self.supports:
            supporters[target].append(source)
        self._attackers = {k: tuple(sorted(v)) for k, v in attackers.items()}
        self._supporters = {k: tuple(sorted(v)) for k, v in supporters.items()}

    def attackers(self, statement_id: str) -> tuple[str, ...]:
        """A(α)：按 id 排序的攻击者。"""
        self.statement(statement_id)
        if self._attackers is None:
            self._build_neighbours()
        assert self._attackers is not None
        return self._attackers[statement_id]

    def supporters(self, statement_id: str) -> tuple[str, ...]:
        """S(α)：按 id 排序的支持者。"""
        self.statement(statement_id)
        if self._supporters is None:
            self._build_neighbours()
        assert self._supporters is not None
        return self._supporters[statement_id]

    def neighbours(self, statement_id: str) -> tuple[str, ...]:
        """A(α) ∪ S(α)。"""
        return tuple(sorted(set(self.attackers(statement_id)) | set(self.supporters(statement_id))))

    def digraph(self) -> nx.DiGraph:
        """以 networkx 有向图表示 A ∪ S，边带 ``relation`` 属性。"""
        if self._digraph is None:
            graph = nx.DiGraph()
            graph.add_nodes_from(self.ids)
            graph.add_edges_from(self.attacks, relation=Relation.ATTACK)
            graph.add_edges_from(self.supports, relation=Relation.SUPPORT)
            self._digraph = graph
        return self._digraph

    def topological_order(self) -> list[str]:
        """确定性的拓扑序（按 id 字典序打破平局）。"""
        return list(nx.lexicographical_topological_sort(self.digraph()))


class Completeness(str, Enum):
    """完备性分类。"""

    COMPLETE = "complete"
    PARTIALLY_COMPLETE = "partially-complete"
    INCOMPLETE = "incomplete"


class CompleteSupportTree(BaseModel):
    """完全支持树：以事实为根基、内部无冲突的极小陈述集合。"""

    root: str = Field(..., description="根陈述 id")
    members: tuple[str, ...] = Field(..., description="按 id 排序的成员")

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"root": "a1", "members": ["a1", "a2", "a3"]}},
    )

    @classmethod
    def of(cls, root: str, members: frozenset[str] | set[str]) -> "CompleteSupportTree":
        return cls(root=root, members=tuple(sorted(members)))

    @property
    def member_set(self) -> frozenset[str]:
        return frozenset(self.members)

    @property
    def sort_key(self) -> tuple[str, tuple[str, ...]]:
        return (self.root, self.members)

    def __contains__(self, statement_id: object) -> bool:
        return statement_id in self.members

    def __str__(self) -> str:
        return "{" + ", ".join(self.members) + "}"
