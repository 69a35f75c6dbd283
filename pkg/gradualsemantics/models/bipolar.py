"""加权双极无环图与前提图的数据模型。"""

from typing import Self

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from gradualsemantics.models.logic import Literal

Edge = tuple[str, str]


class BipolarEvalGraph(BaseModel):
    """抽象渐进语义（DF-QuAD、QEM）所求值的加权双极图。"""

    nodes: tuple[str, ...] = Field(..., description="节点 id")
    base: dict[str, float] = Field(..., description="节点基础分数")
    attack_edges: frozenset[Edge] = Field(default=frozenset(), description="攻击边")
    support_edges: frozenset[Edge] = Field(default=frozenset(), description="支持边")

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "nodes": ["a", "b"],
                "base": {"a": 0.5, "b": 1.0},
                "attack_edges": [],
                "support_edges": [["b", "a"]],
            }
        },
    )

    @model_validator(mode="after")
    def validate_structure(self) -> Self:
        """校验节点、分数范围与边集合不相交。"""
        known = set(self.nodes)
        if len(known) != len(self.nodes):
            raise ValueError("节点 id 重复")
        if set(self.base) != known:
            raise ValueError("基础分数必须恰好覆盖全部节点")
        for node, score in self.base.items():
            if not 0.0 <= score <= 1.0:
                raise ValueError(f"节点 {node} 的基础分数 {score} 不在 [0, 1] 内")
        for source, target in self.attack_edges | self.support_edges:
            if source not in known or target not in known:
                raise ValueError(f"边 ({source}, {target}) 引用了未知节点")
        if self.attack_edges & self.support_edges:
            raise ValueError("攻击边与支持边必须不相交")
        return self

    def __hash__(self) -> int:
        return hash((self.nodes, self.attack_edges, self.support_edges))

    def digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from(self.attack_edges)
        graph.add_edges_from(self.support_edges)
        return graph

    def attackers(self, node: str) -> list[str]:
        return sorted(source for source, target in self.attack_edges if target == node)

    def supporters(self, node: str) -> list[str]:
        return sorted(source for source, target in self.support_edges if target == node)


def literal_node(literal: Literal) -> str:
    """前提图中文字节点的 id；``@`` 保证不与陈述 id 冲突。"""
    return f"@{literal}"


class PremiseGraph(BaseModel):
    """某个焦点陈述的前提图 𝒢¹。

    节点为 Prem(focus) 的文字以及 focus 的直接攻击者/支持者；边只从邻居指向文字，
    深度不超过 1，因此总是无环。
    """

    focus: str = Field(..., description="焦点陈述 id")
    literal_nodes: tuple[Literal, ...] = Field(..., description="Prem(focus) 的文字")
    neighbor_nodes: tuple[str, ...] = Field(default=(), description="focus 的攻击者与支持者")
    base: dict[str, float] = Field(..., description="τ¹：节点 id → 基础分数")
    attack_edges: frozenset[Edge] = Field(default=frozenset(), description="邻居 → 文字节点")
    support_edges: frozenset[Edge] = Field(default=frozenset(), description="邻居 → 文字节点")

    model_config = ConfigDict(frozen=True)

    @property
    def literal_ids(self) -> tuple[str, ...]:
        return tuple(literal_node(item) for item in self.literal_nodes)

    def to_bipolar(self) -> BipolarEvalGraph:
        """转换为可交给抽象语义求值的双极图。"""
        return BipolarEvalGraph(
            nodes=self.literal_ids + self.neighbor_nodes,
            base=dict(self.base),
            attack_edges=self.attack_edges,
            support_edges=self.support_edges,
        )
