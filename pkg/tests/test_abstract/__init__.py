"""抽象渐进语义测试。"""
