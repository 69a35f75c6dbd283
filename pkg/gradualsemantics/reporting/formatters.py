"""结果格式化器。"""

import json
from abc import ABC, abstractmethod
from collections.abc import Mapping, Sequence
from typing import Any, Literal

from gradualsemantics.models.graph import Completeness
from gradualsemantics.models.properties import (
    FixtureResult,
    FuzzReport,
    PropertyVerdict,
    SatisfactionMatrix,
)
from gradualsemantics.properties.definitions import PROPERTIES
from gradualsemantics.registry import SEMANTICS

# 文本输出中强度保留的有效数字
STRENGTH_DIGITS = 6


def format_strength(value: float) -> str:
    """强度的文本形式，如 ``0.432``、``1``。"""
    return f"{value:.{STRENGTH_DIGITS}g}"


class ReportFormatter(ABC):
    """结果格式化器基类。"""

    @abstractmethod
    def format_strengths(self, strengths: Mapping[str, float], semantics: str | None = None) -> str:
        """格式化强度映射。

        Args:
            strengths: 陈述 id → 强度
            semantics: 语义名称

        Returns:
            str: 格式化后的文本
        """
        pass

    @abstractmethod
    def format_completeness(self, classes: Mapping[str, Completeness]) -> str:
        """格式化完备性分类。"""
        pass

    @abstractmethod
    def format_verdict(self, verdict: PropertyVerdict) -> str:
        """格式化单个性质判定。"""
        pass

    @abstractmethod
    def format_verdicts(self, results: Sequence[FixtureResult]) -> str:
        """格式化夹具检查结果。"""
        pass

    @abstractmethod
    def format_fuzz_report(self, report: FuzzReport) -> str:
        """格式化随机试验报告。"""
        pass

    @abstractmethod
    def format_matrix(self, matrix: SatisfactionMatrix) -> str:
        """格式化满足矩阵。"""
        pass


class JSONFormatter(ReportFormatter):
    """JSON 格式化器，键顺序稳定。"""

    def _dump(self, payload: Any) -> str:
        return json.dumps(payload, ensure_ascii=False, indent=2)

    def format_strengths(self, strengths: Mapping[str, float], semantics: str | None = None) -> str:
        return self._dump(
            {"semantics": semantics, "strengths": {k: strengths[k] for k in sorted(strengths)}}
        )

    def format_completeness(self, classes: Mapping[str, Completeness]) -> str:
        return self._dump({k: classes[k].value for k in sorted(classes)})

    def format_verdict(self, verdict: PropertyVerdict) -> str:
        return verdict.model_dump_json(indent=2, exclude_none=True)

    def format_verdicts(self, results: Sequence[FixtureResult]) -> str:
        return self._dump(
            [
                {
                    "fixture": r.fixture,
                    "property": r.pid.value,
                    "semantics": r.semantics,
                    "expected": r.expected.value,
                    "status": r.verdict.status.value,
                    "passed": r.passed,
                    "mismatches": r.mismatches,
                }
                for r in results
            ]
        )

    def format_fuzz_report(self, report: FuzzReport) -> str:
        return report.model_dump_json(indent=2, exclude_none=True)

    def format_matrix(self, matrix: SatisfactionMatrix) -> str:
        rows: dict[str, dict[str, dict[str, Any]]] = {}
        for semantics in matrix.semantics:
            rows[semantics] = {}
            for pid in matrix.properties:
                cell = matrix.cell(semantics, pid)
                rows[semantics][pid.value] = {
                    "status": cell.status.value,
                    "evidence": cell.evidence,
                    "trials": cell.trials,
                }
        return self._dump(
            {
                "semantics": matrix.semantics,
                "properties": [p.value for p in matrix.properties],
                "rows": rows,
                "meta_checks": [c.model_dump() for c in matrix.meta_checks],
            }
        )


class TextFormatter(ReportFormatter):
    """纯文本格式化器。"""

    def format_strengths(self, strengths: Mapping[str, float], semantics: str | None = None) -> str:
        return "\n".join(f"{sid} {format_strength(strengths[sid])}" for sid in sorted(strengths))

    def format_completeness(self, classes: Mapping[str, Completeness]) -> str:
        return "\n".join(f"{sid} {classes[sid].value}" for sid in sorted(classes))

    def format_verdict(self, verdict: PropertyVerdict) -> str:
        lines = [f"{PROPERTIES[verdict.pid].label} [{verdict.semantics}]: {verdict.status.value}"]
        if verdict.vacuous:
            lines.append("  (前件未触发)")
        if verdict.detail:
            lines.append(f"  {verdict.detail}")
        if verdict.witness is not None:
            lines.append(f"  违反条款: {verdict.witness.clause}")
            for index, strengths in enumerate(verdict.witness.strengths):
                name = "G′" if index else "G"
                values = ", ".join(
                    f"{sid}={format_strength(v)}" for sid, v in sorted(strengths.items())
                )
                lines.append(f"  {name}: {values}")
        return "\n".join(lines)

    def format_verdicts(self, results: Sequence[FixtureResult]) -> str:
        lines = []
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            lines.append(
                f"{mark} {r.fixture}: {r.verdict.status.value} (期望 {r.expected.value})"
            )
            for mismatch in r.mismatches:
                lines.append(f"  {mismatch}")
        passed = sum(1 for r in results if r.passed)
        lines.append(f"通过 {passed}/{len(results)}")
        return "\n".join(lines)

    def format_fuzz_report(self, report: FuzzReport) -> str:
        label = PROPERTIES[report.pid].label
        lines = [f"[{label} / {report.semantics}]"]
        if report.not_applicable:
            lines.append("  不适用")
            return "\n".join(lines)
        lines.append(f"  种子: {report.seed}")
        lines.append(f"  试验: {report.trials}（触发 {report.triggered}，跳过 {report.skipped}）")
        lines.append(f"  违反: {report.violations}")
        lines.append(f"  耗时: {report.elapsed_seconds:.2f} 秒")
        if report.first_witness is not None:
            witness = report.first_witness
            lines.append(f"  首个反例（{witness.scenario.size} 个陈述）: {witness.clause}")
            lines.append(f"  焦点: {witness.scenario.focus}")
            for index, graph in enumerate(witness.scenario.graphs):
                lines.append(f"  {'G′' if index else 'G'}:")
                for statement in graph.statements:
                    sigma = format_strength(witness.strengths[index][statement.id])
                    tau = format_strength(graph.weights[statement.id])
                    lines.append(f"    {statement} @ {tau}  σ={sigma}")
        return "\n".join(lines)

    def format_matrix(self, matrix: SatisfactionMatrix) -> str:
        labels = [SEMANTICS[s].label if s in SEMANTICS else s for s in matrix.semantics]
        width = max((len(PROPERTIES[p].label) for p in matrix.properties), default=8)
        lines = ["=" * 60, "满足矩阵".center(60), "=" * 60]
        lines.append(" " * width + "".join(f"  {label:>4}" for label in labels))
        for pid in matrix.properties:
            symbols = "".join(
                f"  {matrix.cell(s, pid).status.symbol:>4}" for s in matrix.semantics
            )
            lines.append(f"{PROPERTIES[pid].label:<{width}}{symbols}")
        if matrix.meta_checks:
            lines.append("")
            lines.append("[元检查]")
            for check in matrix.meta_checks:
                mark = "通过" if check.passed else "未通过"
                suffix = f" - {check.detail}" if check.detail else ""
                lines.append(f"  {check.name}: {mark}{suffix}")
        lines.append("=" * 60)
        return "\n".join(lines)


# 支持的格式类型
OutputFormat = Literal["text", "json"]


def get_formatter(format_type: OutputFormat = "text") -> ReportFormatter:
    """获取指定类型的格式化器。

    Args:
        format_type: 格式类型

    Returns:
        ReportFormatter: 对应的格式化器
    """
    formatters: dict[str, ReportFormatter] = {
        "text": TextFormatter(),
        "json": JSONFormatter(),
    }

    formatter = formatters.get(format_type)
    if formatter is None:
        raise ValueError(f"不支持的格式类型: {format_type}")

    return formatter


def all_passed(results: Sequence[FixtureResult]) -> bool:
    """全部夹具均通过。"""
    return all(r.passed for r in results)