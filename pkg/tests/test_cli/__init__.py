"""命令行测试。"""
