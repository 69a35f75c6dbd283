"""陈述图构造与关系推导测试。"""
