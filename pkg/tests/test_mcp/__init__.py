"""MCP 服务器测试。"""