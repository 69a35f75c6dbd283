"""满足矩阵测试。"""

import pytest

from gradualsemantics.models.properties import (
    MatrixCell,
    MatrixStatus,
    PropertyId,
    SatisfactionMatrix,
)
from gradualsemantics.properties import meta_checks, satisfaction_matrix
from gradualsemantics.utils.exceptions import UnknownPropertyError, UnknownSemanticsError

COLUMNS = ["stability", "provability", "weak-provability"]


@pytest.fixture
def small_settings(monkeypatch):
    """缩小随机场景以加快矩阵计算。"""
    monkeypatch.setenv("GRADUAL_MAX_STATEMENTS", "4")
    monkeypatch.setenv("GRADUAL_ATOM_POOL_SIZE", "3")


class TestSatisfactionMatrix:
    """satisfaction_matrix 测试。"""

    def test_small_matrix(self, small_settings):
        """测试单元状态的判定顺序。"""
        matrix = satisfaction_matrix(["tnorm-p", "dfquad"], COLUMNS, trials=10, seed=3)
        assert matrix.semantics == ["tnorm-p", "dfquad"]
        assert len(matrix.cells) == 6

        stability = matrix.cell("tnorm-p", PropertyId.STABILITY)
        assert stability.status == MatrixStatus.VIOLATED_BY_FIXTURE
        assert stability.evidence is not None and "stability" in stability.evidence

        assert matrix.cell("tnorm-p", PropertyId.PROVABILITY).status == (
            MatrixStatus.NO_COUNTEREXAMPLE
        )
        assert matrix.cell("dfquad", PropertyId.PROVABILITY).status == (
            MatrixStatus.NOT_APPLICABLE
        )
        clean = matrix.cell("dfquad", PropertyId.STABILITY)
        assert clean.status == MatrixStatus.NO_COUNTEREXAMPLE
        assert clean.evidence == "seed=3"

        names = {check.name for check in matrix.meta_checks}
        assert names == {
            "provability-implies-weak-provability",
            "incompatible:provability+stability",
        }
        assert all(check.passed for check in matrix.meta_checks)

    def test_zero_trials_skips_fuzzing(self):
        """测试试验次数为 0 时只使用夹具。"""
        matrix = satisfaction_matrix(["dc-qem"], ["provability"], trials=0)
        cell = matrix.cell("dc-qem", PropertyId.PROVABILITY)
        assert cell.status == MatrixStatus.VIOLATED_BY_FIXTURE
        matrix = satisfaction_matrix(["dc-qem"], ["directionality"], trials=0)
        cell = matrix.cell("dc-qem", PropertyId.DIRECTIONALITY)
        assert cell.status == MatrixStatus.NO_COUNTEREXAMPLE
        assert cell.trials == 0

    def test_empty(self):
        """测试空的行或列。"""
        assert satisfaction_matrix([], trials=0).cells == []
        assert satisfaction_matrix(["qem"], [], trials=0).cells == []

    def test_unknown_names(self):
        """测试未知名称。"""
        with pytest.raises(UnknownSemanticsError):
            satisfaction_matrix(["nope"], ["stability"], trials=0)
        with pytest.raises(UnknownPropertyError):
            satisfaction_matrix(["qem"], ["nope"], trials=0)


class TestMetaChecks:
    """meta_checks 测试。"""

    def _matrix(self, statuses: dict[PropertyId, MatrixStatus]) -> SatisfactionMatrix:
        return SatisfactionMatrix(
            semantics=["x"],
            properties=list(statuses),
            cells=[MatrixCell(semantics="x", pid=p, status=s) for p, s in statuses.items()],
        )

    def test_provability_without_weak_provability(self):
        """测试满足 provability 却违反 weak-provability。"""
        matrix = self._matrix(
            {
                PropertyId.PROVABILITY: MatrixStatus.NO_COUNTEREXAMPLE,
                PropertyId.WEAK_PROVABILITY: MatrixStatus.VIOLATED_BY_FUZZ,
            }
        )
        (check,) = meta_checks(matrix)
        assert check.name == "provability-implies-weak-provability"
        assert not check.passed
        assert "x" in check.detail

    def test_incompatible_set(self):
        """测试不相容的性质组合同时满足。"""
        ok = MatrixStatus.NO_COUNTEREXAMPLE
        matrix = self._matrix(
            {
                PropertyId.REWRITING: ok,
                PropertyId.STABILITY: ok,
                PropertyId.TOP_STRENGTH_PREMISES: ok,
            }
        )
        (check,) = meta_checks(matrix)
        assert check.name == "incompatible:rewriting+stability+top-strength-premises"
        assert not check.passed

    def test_missing_columns_skipped(self):
        """测试缺少相关列时不检查。"""
        matrix = self._matrix({PropertyId.STABILITY: MatrixStatus.NO_COUNTEREXAMPLE})
        assert meta_checks(matrix) == []
