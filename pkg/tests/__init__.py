"""测试套件。"""
