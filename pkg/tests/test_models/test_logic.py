"""文字、前提与陈述模型测试。"""

import pytest
from pydantic import ValidationError

from gradualsemantics.models.logic import (
    TOP,
    Literal,
    Premise,
    Statement,
    lit,
    make_statement,
    negate,
)
from gradualsemantics.utils.exceptions import (
    InconsistentPremiseError,
    InvalidClaimError,
    InvalidLiteralError,
    InvalidPremiseError,
)


class TestLiteral:
    """Literal 测试。"""

    def test_parse_positive_and_negative(self):
        """测试解析正负文字。"""
        assert lit("a") == Literal(atom="a")
        assert lit("~a") == Literal(atom="a", negated=True)
        assert lit(" ~ b ") == Literal(atom="b", negated=True)

    def test_parse_top(self):
        """测试 T 解析为 ⊤。"""
        assert lit("T") is TOP
        assert TOP.is_top
        assert str(TOP) == "T"

    def test_str(self):
        """测试文字的文本形式。"""
        assert str(lit("a")) == "a"
        assert str(lit("~a")) == "~a"

    def test_reserved_atom_rejected(self):
        """测试 T 不能作为原子名。"""
        with pytest.raises(ValidationError):
            Literal(atom="T")

    def test_invalid_atom_rejected(self):
        """测试非法原子名。"""
        with pytest.raises(ValidationError):
            Literal(atom="1a")

    def test_negate_involution(self):
        """测试取反两次得到原文字。"""
        a = lit("a")
        assert negate(a) == lit("~a")
        assert negate(negate(a)) == a

    def test_negate_top_raises(self):
        """测试 ⊤ 不能取反。"""
        with pytest.raises(InvalidLiteralError):
            negate(TOP)

    def test_literal_is_hashable(self):
        """测试文字可作为字典键。"""
        assert len({lit("a"), lit("a"), lit("~a")}) == 2


class TestPremise:
    """Premise 测试。"""

    def test_literals_are_sorted_and_deduplicated(self):
        """测试前提文字规范排序并去重。"""
        premise = Premise.of([lit("b"), lit("a"), lit("b")])
        assert [str(item) for item in premise.literals] == ["a", "b"]
        assert str(premise) == "a & b"

    def test_order_independent(self):
        """测试前提与输入顺序无关。"""
        assert Premise.of([lit("b"), lit("~a")]) == Premise.of([lit("~a"), lit("b")])

    def test_top_premise(self):
        """测试单独的 ⊤ 前提。"""
        premise = Premise.of([TOP])
        assert premise.is_top
        assert premise.literals == ()
        assert str(premise) == "T"

    def test_top_mixed_rejected(self):
        """测试 ⊤ 与其他文字混用。"""
        with pytest.raises(InvalidPremiseError):
            Premise.of([TOP, lit("a")])

    def test_empty_rejected(self):
        """测试空前提。"""
        with pytest.raises(InvalidPremiseError):
            Premise.of([])

    def test_inconsistent_rejected(self):
        """测试同时包含 a 与 ~a。"""
        with pytest.raises(InconsistentPremiseError) as exc_info:
            Premise.of([lit("a"), lit("~a")])
        assert exc_info.value.details == {"atom": "a"}


class TestStatement:
    """Statement 测试。"""

    def test_make_statement(self):
        """测试构造陈述。"""
        statement = make_statement("a1", ["a", "b"], "c")
        assert statement.id == "a1"
        assert [str(item) for item in statement.prem] == ["a", "b"]
        assert statement.claim == lit("c")
        assert not statement.is_fact
        assert str(statement) == "a1: a & b => c"

    def test_fact(self):
        """测试事实陈述。"""
        statement = make_statement("a2", ["T"], "a")
        assert statement.is_fact
        assert statement.prem == ()

    def test_top_claim_rejected(self):
        """测试结论不能为 ⊤。"""
        with pytest.raises(InvalidClaimError):
            make_statement("a1", ["a"], "T")

    def test_key_ignores_id(self):
        """测试结构键与 id 无关。"""
        first = make_statement("a1", ["b", "a"], "c")
        second = make_statement("a9", ["a", "b"], "c")
        assert first.key == second.key

    def test_invalid_id_rejected(self):
        """测试非法陈述 id。"""
        with pytest.raises(ValidationError):
            Statement(id="a'1", premise=Premise.top(), claim=lit("a"))
