"""关系推导测试。"""

from gradualsemantics.graph.relations import derive_relations
from gradualsemantics.models.logic import make_statement


class TestDeriveRelations:
    """derive_relations 测试。"""

    def test_support_and_attack(self):
        """测试结论匹配前提文字为支持，匹配其否定为攻击。"""
        statements = [
            make_statement("x", ["T"], "a"),
            make_statement("y", ["T"], "~a"),
            make_statement("z", ["a"], "b"),
        ]
        attacks, supports = derive_relations(statements)
        assert supports == frozenset({("x", "z")})
        assert attacks == frozenset({("y", "z")})

    def test_negative_premise(self):
        """测试否定前提文字。"""
        statements = [
            make_statement("x", ["T"], "a"),
            make_statement("y", ["T"], "~a"),
            make_statement("z", ["~a"], "b"),
        ]
        attacks, supports = derive_relations(statements)
        assert supports == frozenset({("y", "z")})
        assert attacks == frozenset({("x", "z")})

    def test_claims_never_related(self):
        """测试相互矛盾的结论之间没有边。"""
        statements = [make_statement("x", ["T"], "a"), make_statement("y", ["T"], "~a")]
        assert derive_relations(statements) == (frozenset(), frozenset())

    def test_order_independent(self):
        """测试结果与输入顺序无关。"""
        statements = [
            make_statement("x", ["T"], "a"),
            make_statement("y", ["a", "c"], "b"),
            make_statement("z", ["b"], "~c"),
        ]
        assert derive_relations(statements) == derive_relations(list(reversed(statements)))
