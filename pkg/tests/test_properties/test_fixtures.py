"""内置性质夹具测试。"""

import pytest

from gradualsemantics.models.properties import PropertyId, VerdictStatus
from gradualsemantics.properties import fixture_suite, run_fixture, run_fixtures, select_fixtures
from gradualsemantics.registry import SEMANTICS_NAMES


class TestFixtureSuite:
    """夹具集测试。"""

    def test_names_unique(self):
        """测试夹具名称唯一。"""
        names = [f.name for f in fixture_suite()]
        assert len(names) == len(set(names))

    def test_every_semantics_covered(self):
        """测试每种语义都有夹具。"""
        assert {f.semantics for f in fixture_suite()} == set(SEMANTICS_NAMES)

    @pytest.mark.parametrize("fixture", fixture_suite(), ids=lambda f: f.name)
    def test_fixture_passes(self, fixture):
        """测试每个夹具的判定与期望强度。"""
        result = run_fixture(fixture)
        assert result.verdict.status == fixture.expected, result.verdict.detail
        assert result.mismatches == []
        assert result.passed

    def test_violations_carry_witness(self):
        """测试违反判定都带有证据。"""
        for result in run_fixtures(select_fixtures([PropertyId.STABILITY])):
            if result.verdict.status == VerdictStatus.VIOLATED:
                assert result.verdict.witness is not None


class TestSelectFixtures:
    """select_fixtures 测试。"""

    def test_filter_by_property(self):
        """测试按性质筛选。"""
        selected = select_fixtures([PropertyId.MIRRORING])
        assert selected
        assert all(f.pid == PropertyId.MIRRORING for f in selected)

    def test_filter_by_name(self):
        """测试性质名称字符串。"""
        assert select_fixtures(["weak_provability"]) == select_fixtures(
            [PropertyId.WEAK_PROVABILITY]
        )

    def test_filter_by_semantics(self):
        """测试按语义筛选。"""
        selected = select_fixtures(semantics=["qem"])
        assert selected
        assert all(f.semantics == "qem" for f in selected)

    def test_no_match(self):
        """测试没有匹配的夹具。"""
        assert select_fixtures([PropertyId.DIRECTIONALITY], ["dfquad"]) == []
