"""MCP 服务器实现。

将陈述图求值、完备性分类、性质夹具、随机试验与导出作为 MCP 工具暴露。
"""

import asyncio
import logging
from typing import Any

from mcp.server import Server
from mcp.server.stdio import stdio_server
from mcp.types import TextContent, Tool

from gradualsemantics.config.settings import SEMANTICS_CHOICES
from gradualsemantics.evaluator import GraphEvaluator
from gradualsemantics.models.properties import PropertyId
from gradualsemantics.reporting import get_formatter
from gradualsemantics.utils.exceptions import GradualSemanticsError, SGParseError

logger = logging.getLogger(__name__)

# 创建 MCP 服务器实例
mcp_server = Server("gradualsemantics")

_GRAPH_TEXT = {
    "type": "string",
    "description": "陈述图 DSL 文本，每行形如 `a1: a & b => c @ 0.8`",
}
_SEMANTICS = {
    "type": "string",
    "enum": list(SEMANTICS_CHOICES),
    "description": "语义名称",
}
_PROPERTY = {
    "type": "string",
    "enum": [pid.value for pid in PropertyId],
    "description": "性质名称",
}
_FORMAT = {
    "type": "string",
    "enum": ["text", "json"],
    "description": "输出格式（默认：text）",
}

# 定义可用的工具
AVAILABLE_TOOLS: list[Tool] = [
    Tool(
        name="evaluate_graph",
        description="用指定的渐进语义计算陈述图中每个陈述的强度。",
        inputSchema={
            "type": "object",
            "properties": {"graph_text": _GRAPH_TEXT, "semantics": _SEMANTICS, "format": _FORMAT},
            "required": ["graph_text"],
        },
    ),
    Tool(
        name="classify_statements",
        description="按完全支持树将每个陈述分类为 complete / partially-complete / incomplete。",
        inputSchema={
            "type": "object",
            "properties": {"graph_text": _GRAPH_TEXT, "format": _FORMAT},
            "required": ["graph_text"],
        },
    ),
    Tool(
        name="check_fixtures",
        description="运行内置性质夹具，可按性质与语义筛选。",
        inputSchema={
            "type": "object",
            "properties": {"property": _PROPERTY, "semantics": _SEMANTICS, "format": _FORMAT},
        },
    ),
    Tool(
        name="fuzz_property",
        description="对 (语义, 性质) 运行随机试验，返回违反次数与最小化的首个反例。",
        inputSchema={
            "type": "object",
            "properties": {
                "property": _PROPERTY,
                "semantics": _SEMANTICS,
                "trials": {"type": "integer", "minimum": 0, "description": "试验次数（默认：100）"},
                "seed": {"type": "integer", "description": "基础种子"},
                "format": _FORMAT,
            },
            "required": ["property", "semantics"],
        },
    ),
    Tool(
        name="export_graph",
        description="将陈述图导出为 JSON 或 DOT，可附带某个语义的强度。",
        inputSchema={
            "type": "object",
            "properties": {
                "graph_text": _GRAPH_TEXT,
                "format": {
                    "type": "string",
                    "enum": ["json", "dot"],
                    "description": "导出格式（默认：json）",
                },
                "semantics": _SEMANTICS,
            },
            "required": ["graph_text"],
        },
    ),
]

# MCP 调用默认的随机试验次数，远小于命令行默认值
DEFAULT_TOOL_TRIALS = 100


@mcp_server.list_tools()
async def list_tools() -> list[Tool]:
    """列出所有可用的 MCP 工具。"""
    return AVAILABLE_TOOLS


@mcp_server.call_tool()
async def call_tool(name: str, arguments: Any) -> list[TextContent]:
    """处理 MCP 工具调用。

    Args:
        name: 工具名称
        arguments: 工具参数

    Returns:
        list[TextContent]: 工具执行结果
    """
    from gradualsemantics.mcp.tools import validate_tool_arguments

    arguments = arguments or {}
    valid, error = validate_tool_arguments(name, arguments)
    if not valid:
        return [TextContent(type="text", text=f"错误：{error}")]

    handlers = {
        "evaluate_graph": _handle_evaluate_graph,
        "classify_statements": _handle_classify_statements,
        "check_fixtures": _handle_check_fixtures,
        "fuzz_property": _handle_fuzz_property,
        "export_graph": _handle_export_graph,
    }
    try:
        text = await asyncio.to_thread(handlers[name], arguments)
        return [TextContent(type="text", text=text)]
    except SGParseError as e:
        details = "\n".join(str(err) for err in e.errors)
        return [TextContent(type="text", text=f"解析错误: {e.message}\n{details}")]
    except GradualSemanticsError as e:
        return [TextContent(type="text", text=f"求值错误: {e.message}")]
    except Exception as e:
        logger.error(f"工具 {name} 执行失败: {e}", exc_info=True)
        return [TextContent(type="text", text=f"意外错误: {str(e)}")]


def _handle_evaluate_graph(arguments: dict[str, Any]) -> str:
    """处理 evaluate_graph 工具调用。"""
    evaluator = GraphEvaluator(arguments.get("semantics"))
    strengths = evaluator.evaluate(evaluator.load(arguments["graph_text"], source="mcp"))
    formatter = get_formatter(arguments.get("format", "text"))
    return formatter.format_strengths(strengths, evaluator.semantics.name)


def _handle_classify_statements(arguments: dict[str, Any]) -> str:
    """处理 classify_statements 工具调用。"""
    evaluator = GraphEvaluator()
    classes = evaluator.classify(evaluator.load(arguments["graph_text"], source="mcp"))
    return get_formatter(arguments.get("format", "text")).format_completeness(classes)


def _handle_check_fixtures(arguments: dict[str, Any]) -> str:
    """处理 check_fixtures 工具调用。"""
    from gradualsemantics.properties import run_fixtures, select_fixtures

    pids = [arguments["property"]] if arguments.get("property") else None
    semantics = [arguments["semantics"]] if arguments.get("semantics") else None
    results = run_fixtures(select_fixtures(pids, semantics))
    return get_formatter(arguments.get("format", "text")).format_verdicts(results)


def _handle_fuzz_property(arguments: dict[str, Any]) -> str:
    """处理 fuzz_property 工具调用。"""
    from gradualsemantics.properties import fuzz, get_property

    report = fuzz(
        get_property(arguments["property"]).pid,
        arguments["semantics"],
        trials=arguments.get("trials", DEFAULT_TOOL_TRIALS),
        seed=arguments.get("seed"),
        workers=1,
    )
    return get_formatter(arguments.get("format", "text")).format_fuzz_report(report)


def _handle_export_graph(arguments: dict[str, Any]) -> str:
    """处理 export_graph 工具调用。"""
    evaluator = GraphEvaluator()
    graph = evaluator.load(arguments["graph_text"], source="mcp")
    return evaluator.export(graph, arguments.get("format", "json"), arguments.get("semantics"))


async def main() -> None:
    """启动 MCP 服务器。"""
    logger.info("启动 gradualsemantics MCP 服务器（stdio）")
    async with stdio_server() as (read_stream, write_stream):
        await mcp_server.run(
            read_stream,
            write_stream,
            mcp_server.create_initialization_options(),
        )


def main_sync() -> None:
    """同步入口点（用于 CLI）。"""
    asyncio.run(main())


if __name__ == "__main__":
    main_sync()
