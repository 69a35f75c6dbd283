"""陈述图的规范 DSL 序列化。"""

from gradualsemantics.models.graph import StatementGraph


def format_weight(value: float) -> str:
    """最短可往返的十进制表示（``0.5`` 而非 ``0.50``）。"""
    return repr(float(value))


def serialize_sg(graph: StatementGraph) -> str:
    """将陈述图序列化为规范 DSL 文本。

    陈述按 id 排序，前提文字按规范顺序输出；``parse_sg(serialize_sg(g)) == g``。

    Args:
        graph: 陈述图

    Returns:
        DSL 文本；空图返回空串
    """
    lines = [
        f"{s.id}: {s.premise} => {s.claim} @ {format_weight(graph.weights[s.id])}"
        for s in graph.statements
    ]
    if not lines:
        return ""
    return "\n".join(lines) + "\n"
