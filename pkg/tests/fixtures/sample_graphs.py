"""测试用陈述图 DSL 文本。"""

# a1 的两个前提都由事实支持，a4 攻击前提 a，但 a4 自己的前提 d 没有支持
CLIMATE_GRAPH = """\
%sg 1
# 气候辩论
a1: a & b => c @ 0.8
a2: T => a @ 0.9
a3: T => b @ 0.6
a4: d => ~a @ 0.7
"""

# p1 的前提 b 有支持者 p2、p3，但它们的前提都没有支持
COMPLETENESS_STAGE_1 = """\
p1: b => a @ 0.5
p2: c => b @ 0.5
p3: d => b @ 0.5
"""

# 补上 c 之后 p1 有了 CST，但支持者 p3 仍然没有
COMPLETENESS_STAGE_2 = COMPLETENESS_STAGE_1 + "p4: T => c @ 0.5\n"

COMPLETENESS_STAGE_3 = COMPLETENESS_STAGE_2 + "p5: T => d @ 0.5\n"

# a1 支持 a2，a2 支持 a1
CYCLIC_GRAPH = """\
a1: a => b @ 0.5
a2: b => a @ 0.5
"""

MALFORMED_GRAPH = """\
a1: a & ~a => b @ 0.5
a2: T => c @ 1.5
a3 T => d @ 0.5
%foo bar
a4: T => e @ 0.5
a4: T => f @ 0.5
a5: T => e @ 0.3
"""

# 全部前提至多一个文字
SINGLE_LITERAL_GRAPH = """\
s1: T => a @ 0.7
s2: a => b @ 0.4
s3: T => ~a @ 0.3
s4: b => c @ 0.9
s5: ~b => d @ 0.2
"""
