"""MCP 服务器工具调用测试。"""

import json

from gradualsemantics.mcp.server import call_tool, list_tools
from tests.fixtures.sample_graphs import CLIMATE_GRAPH


async def _text(name: str, arguments: dict) -> str:
    result = await call_tool(name, arguments)
    assert len(result) == 1
    return result[0].text


class TestCallTool:
    """call_tool 测试。"""

    async def test_list_tools(self):
        """测试列出工具。"""
        assert len(await list_tools()) == 5

    async def test_evaluate_graph(self):
        """测试计算强度。"""
        text = await _text("evaluate_graph", {"graph_text": CLIMATE_GRAPH, "semantics": "tnorm-m"})
        assert "a1 0.6" in text.splitlines()

    async def test_evaluate_graph_json(self):
        """测试 JSON 输出。"""
        text = await _text(
            "evaluate_graph",
            {"graph_text": CLIMATE_GRAPH, "semantics": "tnorm-p", "format": "json"},
        )
        data = json.loads(text)
        assert data["semantics"] == "tnorm-p"
        assert abs(data["strengths"]["a1"] - 0.432) < 1e-9

    async def test_classify_statements(self):
        """测试完备性分类。"""
        text = await _text("classify_statements", {"graph_text": CLIMATE_GRAPH})
        assert "a1 complete" in text.splitlines()
        assert "a4 incomplete" in text.splitlines()

    async def test_check_fixtures(self):
        """测试运行筛选后的夹具。"""
        text = await _text("check_fixtures", {"property": "stability", "semantics": "tnorm-p"})
        assert "PASS tp-stability-unsupported-premise" in text
        assert "FAIL" not in text

    async def test_fuzz_property(self):
        """测试随机试验。"""
        text = await _text(
            "fuzz_property",
            {"property": "stability", "semantics": "dfquad", "trials": 3, "seed": 2},
        )
        assert "[Stability / dfquad]" in text
        assert "违反: 0" in text

    async def test_export_graph(self):
        """测试导出 DOT。"""
        text = await _text(
            "export_graph",
            {"graph_text": CLIMATE_GRAPH, "format": "dot", "semantics": "dc-dfquad"},
        )
        assert text.startswith("digraph SG {")
        assert "σ=" in text

    async def test_invalid_arguments(self):
        """测试参数错误。"""
        text = await _text("evaluate_graph", {})
        assert text == "错误：缺少必需参数: graph_text"

    async def test_parse_error(self):
        """测试解析错误返回全部错误位置。"""
        text = await _text("evaluate_graph", {"graph_text": "a1: a => T @ 0.5\n%foo\n"})
        assert text.startswith("解析错误: ")
        assert "1:" in text and "2:1: [unknown-directive]" in text

    async def test_fuzz_not_applicable(self):
        """测试不适用的组合。"""
        text = await _text(
            "fuzz_property", {"property": "provability", "semantics": "qem", "trials": 1}
        )
        assert "不适用" in text
