"""结果格式化模块。"""

from gradualsemantics.reporting.formatters import (
    JSONFormatter,
    OutputFormat,
    ReportFormatter,
    TextFormatter,
    all_passed,
    format_strength,
    get_formatter,
)

__all__ = [
    "ReportFormatter",
    "JSONFormatter",
    "TextFormatter",
    "get_formatter",
    "OutputFormat",
    "format_strength",
    "all_passed",
]
