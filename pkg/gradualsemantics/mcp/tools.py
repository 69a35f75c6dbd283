"""MCP 工具查找与参数校验。"""

from typing import Any

from mcp.types import Tool

from gradualsemantics.mcp.server import AVAILABLE_TOOLS

# JSON Schema 类型 → (Python 类型, 错误消息中的名称)
_TYPE_CHECKS: dict[str, tuple[type | tuple[type, ...], str]] = {
    "string": (str, "字符串"),
    "boolean": (bool, "布尔值"),
    "number": ((int, float), "数字"),
    "integer": (int, "整数"),
}

_TOOLS_BY_NAME: dict[str, Tool] = {tool.name: tool for tool in AVAILABLE_TOOLS}


def get_tools() -> list[Tool]:
    """获取所有可用的 MCP 工具。"""
    return list(AVAILABLE_TOOLS)


def get_tool(name: str) -> Tool | None:
    """根据名称获取工具。"""
    return _TOOLS_BY_NAME.get(name)


def _check_value(param: str, value: Any, schema: dict[str, Any]) -> str | None:
    """按单个参数的 schema 检查取值，返回错误消息。"""
    declared = schema.get("type", "")
    expected = _TYPE_CHECKS.get(declared)
    if expected is not None:
        python_type, label = expected
        # bool 是 int 的子类
        is_bool_number = isinstance(value, bool) and declared in ("integer", "number")
        if not isinstance(value, python_type) or is_bool_number:
            return f"参数 {param} 应该是{label}"
    if "enum" in schema and value not in schema["enum"]:
        return f"参数 {param} 的值无效，允许的值: {schema['enum']}"
    if "minimum" in schema and value < schema["minimum"]:
        return f"参数 {param} 不能小于 {schema['minimum']}"
    return None


def validate_tool_arguments(name: str, arguments: dict[str, Any]) -> tuple[bool, str | None]:
    """验证工具参数。

    Args:
        name: 工具名称
        arguments: 参数字典

    Returns:
        tuple: (是否有效, 错误消息)
    """
    tool = get_tool(name)
    if tool is None:
        return False, f"未知的工具: {name}"

    schema = tool.inputSchema or {}
    for param in schema.get("required", []):
        if arguments.get(param) in (None, ""):
            return False, f"缺少必需参数: {param}"

    properties = schema.get("properties", {})
    for param, value in arguments.items():
        if param in properties:
            error = _check_value(param, value, properties[param])
            if error is not None:
                return False, error

    return True, None
