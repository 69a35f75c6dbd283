"""陈述图求值器主类。

整合解析、语义求值、完备性分类与导出，供命令行与 MCP 服务器使用。
"""

import logging
import time
from pathlib import Path
from typing import Any

from gradualsemantics.config.settings import get_settings
from gradualsemantics.models.graph import Completeness, StatementGraph
from gradualsemantics.parsing import ExportFormat, get_exporter, load_sg
from gradualsemantics.registry import NamedSemantics, get_semantics
from gradualsemantics.structured.support_trees import all_csts, classify_completeness

logger = logging.getLogger(__name__)


class GraphEvaluator:
    """陈述图求值器。

    Attributes:
        semantics: 默认使用的语义
    """

    def __init__(self, semantics: NamedSemantics | str | None = None) -> None:
        """初始化求值器。

        Args:
            semantics: 语义或其名称，默认取配置 ``default_semantics``
        """
        if semantics is None:
            semantics = get_settings().default_semantics
        self.semantics = get_semantics(semantics) if isinstance(semantics, str) else semantics

    def _log_step(self, step: str, message: str, extra: dict[str, Any] | None = None) -> None:
        info: dict[str, Any] = {"step": step}
        if extra:
            info.update(extra)
        logger.info(f"[{step}] {message}", extra=info)

    def _resolve(self, semantics: NamedSemantics | str | None) -> NamedSemantics:
        if semantics is None:
            return self.semantics
        return get_semantics(semantics) if isinstance(semantics, str) else semantics

    def load(self, text: str, source: str | None = None) -> StatementGraph:
        """解析 DSL 文本。

        Raises:
            SGParseError: 文本包含错误
        """
        self._log_step("parse", f"解析陈述图，来源: {source or '内存'}")
        graph = load_sg(text)
        self._log_step("parse", f"解析完成，共 {len(graph)} 个陈述", {"statements": len(graph)})
        return graph

    def load_file(self, file_path: str | Path) -> StatementGraph:
        """读取并解析 ``.sg`` 文件。"""
        path = Path(file_path)
        return self.load(path.read_text(encoding="utf-8"), source=str(path))

    def evaluate(
        self, graph: StatementGraph, semantics: NamedSemantics | str | None = None
    ) -> dict[str, float]:
        """计算每个陈述的强度，按 id 排序。"""
        sem = self._resolve(semantics)
        start = time.perf_counter()
        strengths = sem.evaluate(graph)
        self._log_step(
            "evaluate",
            f"{sem.name} 求值完成，耗时 {(time.perf_counter() - start) * 1000:.2f} 毫秒",
            {"semantics": sem.name},
        )
        return dict(sorted(strengths.items()))

    def classify(self, graph: StatementGraph) -> dict[str, Completeness]:
        """对每个陈述做完备性分类，按 id 排序。"""
        trees = all_csts(graph)
        self._log_step(
            "classify", f"共枚举 {sum(len(t) for t in trees.values())} 棵完全支持树"
        )
        return {sid: classify_completeness(graph, sid, trees) for sid in sorted(graph.ids)}

    def export(
        self,
        graph: StatementGraph,
        format_type: ExportFormat = "json",
        semantics: NamedSemantics | str | None = None,
        annotate: bool = False,
    ) -> str:
        """导出陈述图，可选地附带强度。

        Args:
            graph: 陈述图
            format_type: json 或 dot
            semantics: 标注强度所用的语义
            annotate: 是否标注强度；指定 semantics 时自动标注
        """
        strengths = None
        if annotate or semantics is not None:
            strengths = self.evaluate(graph, semantics)
        self._log_step("export", f"导出为 {format_type}")
        return get_exporter(format_type).export(graph, strengths)

    def evaluate_text(
        self, text: str, semantics: NamedSemantics | str | None = None
    ) -> dict[str, float]:
        """解析并求值。"""
        return self.evaluate(self.load(text), semantics)
