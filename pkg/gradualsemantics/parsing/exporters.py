"""陈述图的 JSON 与 DOT 导出器。"""

from abc import ABC, abstractmethod
from collections.abc import Mapping
from typing import Literal

from pydantic import BaseModel, Field

from gradualsemantics.models.graph import StatementGraph
from gradualsemantics.utils.exceptions import MissingStrengthError

StrengthMap = Mapping[str, float]


class ExportedStatement(BaseModel):
    """导出的单个陈述。"""

    id: str = Field(..., description="陈述 id")
    premise: list[str] | Literal["top"] = Field(..., description="前提文字列表或 top")
    claim: str = Field(..., description="结论文字")
    weight: float = Field(..., description="权重 τ")
    strength: float | None = Field(default=None, description="语义强度（可选）")


class ExportedGraph(BaseModel):
    """导出的陈述图。"""

    statements: list[ExportedStatement] = Field(default_factory=list, description="陈述")
    attacks: list[tuple[str, str]] = Field(default_factory=list, description="攻击边")
    supports: list[tuple[str, str]] = Field(default_factory=list, description="支持边")


def _check_strengths(graph: StatementGraph, strengths: StrengthMap | None) -> None:
    if strengths is None:
        return
    missing = [sid for sid in graph.ids if sid not in strengths]
    if missing:
        raise MissingStrengthError(f"强度映射缺少陈述: {missing}")


class GraphExporter(ABC):
    """陈述图导出器基类。"""

    @abstractmethod
    def export(self, graph: StatementGraph, strengths: StrengthMap | None = None) -> str:
        """导出陈述图。

        Args:
            graph: 陈述图
            strengths: 可选的强度映射，需覆盖全部陈述

        Returns:
            str: 导出文本
        """
        pass


class JSONExporter(GraphExporter):
    """JSON 导出器，输出字节级确定。"""

    def export(self, graph: StatementGraph, strengths: StrengthMap | None = None) -> str:
        _check_strengths(graph, strengths)
        exported = ExportedGraph(
            statements=[
                ExportedStatement(
                    id=s.id,
                    premise="top" if s.is_fact else [str(item) for item in s.prem],
                    claim=str(s.claim),
                    weight=graph.weights[s.id],
                    strength=None if strengths is None else float(strengths[s.id]),
                )
                for s in graph.statements
            ],
            attacks=sorted(graph.attacks),
            supports=sorted(graph.supports),
        )
        return exported.model_dump_json(indent=2, exclude_none=True)


class DOTExporter(GraphExporter):
    """Graphviz DOT 导出器：支持边绿色标 “+”，攻击边红色标 “-”。

    id 一律加双引号，``node``、``edge`` 等关键字也能作为节点名。
    """

    def export(self, graph: StatementGraph, strengths: StrengthMap | None = None) -> str:
        _check_strengths(graph, strengths)
        lines = ["digraph SG {", "  rankdir=BT;", "  node [shape=box];"]
        for s in graph.statements:
            label = [s.id, f"{s.premise} => {s.claim}", f"τ={graph.weights[s.id]:g}"]
            if strengths is not None:
                label.append(f"σ={strengths[s.id]:.4f}")
            text = "\\n".join(part.replace('"', '\\"') for part in label)
            lines.append(f'  "{s.id}" [label="{text}"];')
        for source, target in sorted(graph.supports):
            lines.append(f'  "{source}" -> "{target}" [label="+", color=green, fontcolor=green];')
        for source, target in sorted(graph.attacks):
            lines.append(f'  "{source}" -> "{target}" [label="-", color=red, fontcolor=red];')
        lines.append("}")
        return "\n".join(lines) + "\n"


ExportFormat = Literal["json", "dot"]


def get_exporter(format_type: ExportFormat = "json") -> GraphExporter:
    """获取指定类型的导出器。

    Args:
        format_type: 导出格式

    Returns:
        GraphExporter: 对应的导出器
    """
    exporters: dict[str, GraphExporter] = {
        "json": JSONExporter(),
        "dot": DOTExporter(),
    }
    exporter = exporters.get(format_type)
    if exporter is None:
        raise ValueError(f"不支持的导出格式: {format_type}")
    return exporter


def export_json(graph: StatementGraph, strengths: StrengthMap | None = None) -> str:
    """导出为 JSON。"""
    return JSONExporter().export(graph, strengths)


def export_dot(graph: StatementGraph, strengths: StrengthMap | None = None) -> str:
    """导出为 DOT。"""
    return DOTExporter().export(graph, strengths)
