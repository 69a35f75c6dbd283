"""陈述图 DSL 解析器。

逐行解析并收集文件中的全部错误（不在第一个错误处停止）。
"""

import logging

from lark import Token, Tree, UnexpectedInput

from gradualsemantics.graph.builder import build_graph
from gradualsemantics.models.graph import StatementGraph
from gradualsemantics.models.logic import Literal, Statement, make_statement
from gradualsemantics.models.parsing import ParseError, ParseErrorKind, SourceSpan
from gradualsemantics.parsing.grammar import KNOWN_DIRECTIVES, get_statement_parser
from gradualsemantics.utils.exceptions import (
    CyclicGraphError,
    GraphStructureError,
    InconsistentPremiseError,
    SGParseError,
)

logger = logging.getLogger(__name__)


def _span(line: int, token: Token | None, length: int | None = None) -> SourceSpan:
    if token is None:
        return SourceSpan(line=line, column=1, length=1)
    return SourceSpan(
        line=line,
        column=token.column or 1,
        length=max(1, length if length is not None else len(str(token))),
    )


def _literal(tree: Tree) -> tuple[Literal, Token]:
    tokens = [child for child in tree.children if isinstance(child, Token)]
    name = tokens[-1]
    negated = len(tokens) == 2
    return Literal(atom=str(name), negated=negated), tokens[0]


class _LineResult:
    """单行解析结果。"""

    def __init__(self, statement: Statement, weight: float, id_token: Token) -> None:
        self.statement = statement
        self.weight = weight
        self.id_token = id_token


def _parse_statement_line(text: str, line_no: int) -> _LineResult | list[ParseError]:
    try:
        tree = get_statement_parser().parse(text)
    except UnexpectedInput as e:
        token = getattr(e, "token", None) or getattr(e, "char", None)
        length = len(str(token)) if token else 1
        return [
            ParseError(
                span=SourceSpan(line=line_no, column=max(1, e.column), length=max(1, length)),
                kind=ParseErrorKind.SYNTAX,
                message=f"语法错误: 无法识别 {str(token)!r}" if token else "语法错误",
            )
        ]

    id_token, premise_tree, claim_tree, weight_token = tree.children
    errors: list[ParseError] = []

    weight = float(str(weight_token))
    if not 0.0 <= weight <= 1.0:
        errors.append(
            ParseError(
                span=_span(line_no, weight_token),
                kind=ParseErrorKind.WEIGHT_OUT_OF_RANGE,
                message=f"权重 {weight_token} 不在 [0, 1] 内",
            )
        )

    try:
        claim, _ = _literal(claim_tree)
        pairs = (
            [] if premise_tree.data == "top_premise"
            else [_literal(child) for child in premise_tree.children]
        )
    except ValueError:
        # T 只能出现在前提位置
        return [
            ParseError(
                span=_span(line_no, id_token),
                kind=ParseErrorKind.SYNTAX,
                message="T 不能作为原子名或结论",
            )
        ]

    if premise_tree.data == "top_premise":
        literals: list[Literal] = []
        premise_token = premise_tree.children[0]
        premise_length = 1
        is_top = True
    else:
        literals = [pair[0] for pair in pairs]
        premise_token = pairs[0][1]
        last_name = premise_tree.children[-1].children[-1]
        premise_length = last_name.column + len(str(last_name)) - premise_token.column
        is_top = False

    statement: Statement | None = None
    try:
        statement = make_statement(
            str(id_token), ["T"] if is_top else literals, claim
        )
    except InconsistentPremiseError as e:
        errors.append(
            ParseError(
                span=_span(line_no, premise_token, premise_length),
                kind=ParseErrorKind.INCONSISTENT_PREMISE,
                message=e.message,
            )
        )
    except GraphStructureError as e:
        errors.append(
            ParseError(
                span=_span(line_no, premise_token),
                kind=ParseErrorKind.SYNTAX,
                message=e.message,
            )
        )

    if errors or statement is None:
        return errors
    return _LineResult(statement, weight, id_token)


def parse_sg(text: str) -> StatementGraph | list[ParseError]:
    """解析 DSL 文本。

    Args:
        text: UTF-8 文本

    Returns:
        校验通过的 StatementGraph，或按位置排序的全部 ParseError
    """
    errors: list[ParseError] = []
    results: list[tuple[int, _LineResult]] = []
    ids: dict[str, int] = {}
    keys: dict[object, str] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("%"):
            name = stripped[1:].split(maxsplit=1)[0] if len(stripped) > 1 else ""
            if name not in KNOWN_DIRECTIVES:
                column = raw.index("%") + 1
                errors.append(
                    ParseError(
                        span=SourceSpan(line=line_no, column=column, length=len(name) + 1),
                        kind=ParseErrorKind.UNKNOWN_DIRECTIVE,
                        message=f"未知指令: %{name}",
                    )
                )
            continue

        outcome = _parse_statement_line(raw, line_no)
        if isinstance(outcome, list):
            errors.extend(outcome)
            continue

        statement = outcome.statement
        if statement.id in ids:
            errors.append(
                ParseError(
                    span=_span(line_no, outcome.id_token),
                    kind=ParseErrorKind.DUPLICATE_ID,
                    message=f"陈述 id {statement.id} 已在第 {ids[statement.id]} 行定义",
                )
            )
            continue
        if statement.key in keys:
            errors.append(
                ParseError(
                    span=_span(line_no, outcome.id_token),
                    kind=ParseErrorKind.DUPLICATE_STATEMENT,
                    message=f"陈述 {statement.id} 与 {keys[statement.key]} 在逻辑上相同",
                )
            )
            continue
        ids[statement.id] = line_no
        keys[statement.key] = statement.id
        results.append((line_no, outcome))

    if errors:
        logger.debug(f"DSL 解析发现 {len(errors)} 个错误")
        return sorted(errors, key=lambda e: (e.span.line, e.span.column))

    try:
        return build_graph(
            [item.statement for _, item in results],
            {item.statement.id: item.weight for _, item in results},
        )
    except CyclicGraphError as e:
        line_no = ids.get(e.cycle[0], 1)
        return [
            ParseError(
                span=SourceSpan(line=line_no, column=1, length=len(e.cycle[0])),
                kind=ParseErrorKind.CYCLIC_GRAPH,
                message=e.message,
            )
        ]


def load_sg(text: str) -> StatementGraph:
    """解析 DSL 文本，失败时抛出异常。

    Raises:
        SGParseError: 文本包含错误，``errors`` 属性给出全部错误
    """
    result = parse_sg(text)
    if isinstance(result, list):
        raise SGParseError(result)
    return result
