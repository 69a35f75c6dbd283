"""逻辑层数据模型：文字、前提与陈述。"""

import re
from collections.abc import Iterable
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator

from gradualsemantics.utils.exceptions import (
    InconsistentPremiseError,
    InvalidClaimError,
    InvalidLiteralError,
    InvalidPremiseError,
)

TOP_SYMBOL = "⊤"
# DSL 中 ⊤ 的书写形式，因此不能作为原子名
TOP_TOKEN = "T"
IDENTIFIER_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class Literal(BaseModel):
    """文字：原子或其否定。

    ⊤ 使用保留原子 ``⊤`` 表示，且从不取反。
    """

    atom: str = Field(..., description="原子名称")
    negated: bool = Field(default=False, description="是否为否定文字")

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"atom": "a", "negated": True}},
    )

    @field_validator("atom")
    @classmethod
    def validate_atom(cls, v: str) -> str:
        """原子必须是标识符或 ⊤。"""
        if v == TOP_SYMBOL:
            return v
        if not IDENTIFIER_RE.fullmatch(v) or v == TOP_TOKEN:
            raise ValueError(f"非法原子名称: {v!r}")
        return v

    @property
    def is_top(self) -> bool:
        return self.atom == TOP_SYMBOL

    @property
    def sort_key(self) -> tuple[str, bool]:
        return (self.atom, self.negated)

    def __str__(self) -> str:
        if self.is_top:
            return TOP_TOKEN
        return f"~{self.atom}" if self.negated else self.atom


TOP = Literal(atom=TOP_SYMBOL)


def lit(text: str) -> Literal:
    """由 ``a`` / ``~a`` / ``T`` 形式的文本构造文字。

    Args:
        text: 文字文本

    Returns:
        对应的 Literal
    """
    text = text.strip()
    if text in (TOP_TOKEN, TOP_SYMBOL):
        return TOP
    if text.startswith(("~", "¬")):
        return Literal(atom=text[1:].strip(), negated=True)
    return Literal(atom=text)


def negate(literal: Literal) -> Literal:
    """翻转文字的极性，¬¬x 规范化为 x。

    Args:
        literal: 待取反的文字

    Returns:
        极性相反的文字

    Raises:
        InvalidLiteralError: 对 ⊤ 取反时
    """
    if literal.is_top:
        raise InvalidLiteralError("⊤ 没有否定形式")
    return Literal(atom=literal.atom, negated=not literal.negated)


class PremiseKind(str, Enum):
    """前提类型。"""

    TOP = "top"
    CONJUNCTION = "conjunction"


class Premise(BaseModel):
    """前提：⊤ 或一致的文字合取。

    ``literals`` 始终按 (原子, 极性) 规范排序，且 kind 为 TOP 时为空。
    """

    kind: PremiseKind = Field(..., description="前提类型")
    literals: tuple[Literal, ...] = Field(default=(), description="规范排序的文字集合")

    model_config = ConfigDict(frozen=True)

    @classmethod
    def top(cls) -> "Premise":
        return cls(kind=PremiseKind.TOP)

    @classmethod
    def of(cls, literals: Iterable[Literal]) -> "Premise":
        """由文字集合构造规范化前提。

        Args:
            literals: 文字；单独的 ⊤ 表示 ⊤ 前提

        Returns:
            规范化的 Premise

        Raises:
            InvalidPremiseError: ⊤ 与其他文字混用，或文字为空
            InconsistentPremiseError: 同一原子以两种极性出现
        """
        items = list(literals)
        if any(item.is_top for item in items):
            if len(set(items)) != 1:
                raise InvalidPremiseError(
                    "⊤ 只能单独作为前提", {"literals": [str(item) for item in items]}
                )
            return cls.top()
        if not items:
            raise InvalidPremiseError("合取前提不能为空，请使用 ⊤")
        unique = sorted(set(items), key=lambda item: item.sort_key)
        atoms: dict[str, bool] = {}
        for item in unique:
            if item.atom in atoms and atoms[item.atom] != item.negated:
                raise InconsistentPremiseError(
                    f"前提不一致: 同时包含 {item.atom} 与 ~{item.atom}",
                    {"atom": item.atom},
                )
            atoms[item.atom] = item.negated
        return cls(kind=PremiseKind.CONJUNCTION, literals=tuple(unique))

    @property
    def is_top(self) -> bool:
        return self.kind == PremiseKind.TOP

    def __str__(self) -> str:
        if self.is_top:
            return TOP_TOKEN
        return " & ".join(str(item) for item in self.literals)


class Statement(BaseModel):
    """陈述 ⟨Φ, Ψ⟩：前提与结论构成的二元组。"""

    id: str = Field(..., description="陈述标识")
    premise: Premise = Field(..., description="前提 Φ")
    claim: Literal = Field(..., description="结论 Ψ，不能为 ⊤")

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "id": "a1",
                "premise": {
                    "kind": "conjunction",
                    "literals": [{"atom": "a", "negated": False}, {"atom": "b", "negated": False}],
                },
                "claim": {"atom": "c", "negated": False},
            }
        },
    )

    @field_validator("id")
    @classmethod
    def validate_id(cls, v: str) -> str:
        """陈述标识必须是标识符。"""
        if not IDENTIFIER_RE.fullmatch(v):
            raise ValueError(f"非法陈述标识: {v!r}")
        return v

    @property
    def prem(self) -> tuple[Literal, ...]:
        """Prem(α)：前提中的文字，不含 ⊤。"""
        return self.premise.literals

    @property
    def is_fact(self) -> bool:
        return self.premise.is_top

    @property
    def key(self) -> tuple[Premise, Literal]:
        """结构键 (前提, 结论)，在同一图中唯一。"""
        return (self.premise, self.claim)

    def __str__(self) -> str:
        return f"{self.id}: {self.premise} => {self.claim}"


def make_statement(
    statement_id: str,
    premise_literals: Iterable[Literal | str],
    claim: Literal | str,
) -> Statement:
    """构造规范化陈述。

    Args:
        statement_id: 陈述标识
        premise_literals: 前提文字，单独的 ⊤ 表示事实
        claim: 结论文字

    Returns:
        规范化的 Statement

    Raises:
        InvalidClaimError: 结论为 ⊤
        InvalidPremiseError: 前提非法
        InconsistentPremiseError: 前提不一致
    """
    literals = [lit(item) if isinstance(item, str) else item for item in premise_literals]
    claim_literal = lit(claim) if isinstance(claim, str) else claim
    if claim_literal.is_top:
        raise InvalidClaimError(f"陈述 {statement_id} 的结论不能为 ⊤")
    return Statement(id=statement_id, premise=Premise.of(literals), claim=claim_literal)
