"""陈述图 DSL 的 lark 语法。

每行一个陈述::

    <id> : <premise> => <claim> @ <weight>

premise 为 ``T`` 或 ``lit (& lit)*``，lit 为 ``atom`` 或 ``~atom``。``#`` 起始注释，
``%`` 起始的行为指令。
"""

from lark import Lark

STATEMENT_GRAMMAR = r"""
    ?start: statement

    statement: NAME ":" premise "=>" literal "@" WEIGHT

    premise: TOP                         -> top_premise
           | literal ("&" literal)*      -> conjunction

    literal: NEG? NAME

    TOP: "T"
    NEG: "~"
    NAME: /[A-Za-z_][A-Za-z0-9_]*/
    WEIGHT: /[0-9]+(\.[0-9]+)?([eE][+-]?[0-9]+)?/ | /\.[0-9]+/
    COMMENT: /#[^\n]*/

    %import common.WS_INLINE
    %ignore WS_INLINE
    %ignore COMMENT
"""

# 已知指令：%sg <版本>
KNOWN_DIRECTIVES = frozenset({"sg"})

_parser: Lark | None = None


def get_statement_parser() -> Lark:
    """获取（惰性构建的）单行语句解析器。"""
    global _parser
    if _parser is None:
        _parser = Lark(STATEMENT_GRAMMAR, parser="lalr")
    return _parser
