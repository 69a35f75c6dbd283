"""自定义异常类。"""

from typing import Any


class GradualSemanticsError(Exception):
    """渐进语义引擎基础异常类。"""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} - 详情: {self.details}"
        return self.message


class ConfigurationError(GradualSemanticsError):
    """配置错误异常。"""

    pass


# ---------- 结构错误 ----------


class GraphStructureError(GradualSemanticsError):
    """陈述图结构错误异常。"""

    pass


class InvalidLiteralError(GraphStructureError):
    """非法文字（例如对 ⊤ 取反）。"""

    pass


class InconsistentPremiseError(GraphStructureError):
    """前提中同时出现 x 与 ¬x。"""

    pass


class InvalidPremiseError(GraphStructureError):
    """前提中 ⊤ 与其他文字混用。"""

    pass


class InvalidClaimError(GraphStructureError):
    """结论为 ⊤。"""

    pass


class DuplicateStatementError(GraphStructureError):
    """重复的陈述（id 重复或 (前提, 结论) 重复）。"""

    pass


class CyclicGraphError(GraphStructureError):
    """攻击/支持关系中存在环。"""

    def __init__(self, cycle: list[str], details: dict[str, Any] | None = None) -> None:
        self.cycle = cycle
        super().__init__(f"陈述图存在环: {' -> '.join(cycle)}", details)


class WeightOutOfRangeError(GraphStructureError):
    """权重不在 [0,1] 内。"""

    pass


class MissingWeightError(GraphStructureError):
    """陈述缺少权重。"""

    pass


class UnknownStatementError(GraphStructureError):
    """引用了图中不存在的陈述。"""

    pass


class SGParseError(GradualSemanticsError):
    """DSL 解析失败，携带全部解析错误。"""

    def __init__(self, errors: list[Any]) -> None:
        self.errors = errors
        super().__init__(f"解析失败，共 {len(errors)} 个错误")


# ---------- 求值错误 ----------


class EvaluationError(GradualSemanticsError):
    """语义求值错误异常。"""

    pass


class CSTLimitExceededError(EvaluationError):
    """完全支持树数量超过上限。"""

    pass


class InvalidSupportTreeError(EvaluationError):
    """给定集合不是完全支持树。"""

    pass


class PremiseGraphError(EvaluationError):
    """无法构建前提图。"""

    pass


class MissingStrengthError(EvaluationError):
    """缺少邻居或陈述的强度。"""

    pass


# ---------- 性质实验 ----------


class ScenarioError(GradualSemanticsError):
    """性质场景错误异常。"""

    pass


class MalformedScenarioError(ScenarioError):
    """场景不满足性质的结构前件。"""

    pass


class ScenarioGenerationError(ScenarioError):
    """在给定界限内无法生成场景。"""

    pass


# ---------- 名称解析 ----------


class UnknownNameError(GradualSemanticsError):
    """未知名称错误异常。"""

    pass


class UnknownSemanticsError(UnknownNameError):
    """未知的语义名称。"""

    pass


class UnknownPropertyError(UnknownNameError):
    """未知的性质名称。"""

    pass


class UnknownAggregatorError(UnknownNameError):
    """未知或未启用的前提聚合函数。"""

    pass
