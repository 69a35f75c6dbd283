"""DSL 解析与导出测试。"""
