"""结构化语义测试。"""
