"""性质实验测试。"""
