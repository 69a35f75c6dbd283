"""工具模块。"""

from gradualsemantics.utils.exceptions import (
    ConfigurationError,
    CSTLimitExceededError,
    CyclicGraphError,
    DuplicateStatementError,
    EvaluationError,
    GradualSemanticsError,
    GraphStructureError,
    InconsistentPremiseError,
    InvalidClaimError,
    InvalidLiteralError,
    InvalidPremiseError,
    InvalidSupportTreeError,
    MalformedScenarioError,
    MissingStrengthError,
    MissingWeightError,
    PremiseGraphError,
    ScenarioError,
    ScenarioGenerationError,
    SGParseError,
    UnknownAggregatorError,
    UnknownNameError,
    UnknownPropertyError,
    UnknownSemanticsError,
    UnknownStatementError,
    WeightOutOfRangeError,
)
from gradualsemantics.utils.logging_config import get_logger, setup_logging

__all__ = [
    "GradualSemanticsError",
    "ConfigurationError",
    "GraphStructureError",
    "InvalidLiteralError",
    "InconsistentPremiseError",
    "InvalidPremiseError",
    "InvalidClaimError",
    "DuplicateStatementError",
    "CyclicGraphError",
    "WeightOutOfRangeError",
    "MissingWeightError",
    "UnknownStatementError",
    "SGParseError",
    "EvaluationError",
    "CSTLimitExceededError",
    "InvalidSupportTreeError",
    "PremiseGraphError",
    "MissingStrengthError",
    "ScenarioError",
    "MalformedScenarioError",
    "ScenarioGenerationError",
    "UnknownNameError",
    "UnknownSemanticsError",
    "UnknownPropertyError",
    "UnknownAggregatorError",
    "setup_logging",
    "get_logger",
]
