"""模块化语义测试。"""
