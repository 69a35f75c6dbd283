"""DSL 解析诊断模型。"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class SourceSpan(BaseModel):
    """源码位置（1 起始）。"""

    line: int = Field(..., ge=1, description="行号")
    column: int = Field(..., ge=1, description="列号")
    length: int = Field(default=1, ge=1, description="长度")

    model_config = ConfigDict(frozen=True)

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class ParseErrorKind(str, Enum):
    """解析错误类别，全部为致命错误。"""

    SYNTAX = "syntax"
    DUPLICATE_ID = "duplicate-id"
    INCONSISTENT_PREMISE = "inconsistent-premise"
    WEIGHT_OUT_OF_RANGE = "weight-out-of-range"
    DUPLICATE_STATEMENT = "duplicate-statement"
    UNKNOWN_DIRECTIVE = "unknown-directive"
    CYCLIC_GRAPH = "cyclic-graph"


class ParseError(BaseModel):
    """单条解析错误。"""

    span: SourceSpan = Field(..., description="错误位置")
    kind: ParseErrorKind = Field(..., description="错误类别")
    message: str = Field(..., min_length=1, description="错误描述")

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "span": {"line": 1, "column": 4, "length": 6},
                "kind": "inconsistent-premise",
                "message": "前提不一致: 同时包含 a 与 ~a",
            }
        },
    )

    def __str__(self) -> str:
        return f"{self.span}: [{self.kind.value}] {self.message}"
