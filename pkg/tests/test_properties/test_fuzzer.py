"""性质随机试验测试。"""

from gradualsemantics.models.properties import FuzzConfig, PropertyId, VerdictStatus
from gradualsemantics.properties import check_property, fuzz, trial_seed
from gradualsemantics.properties.fuzzer import SEED_STRIDE

SMALL = FuzzConfig(max_statements=5, atom_pool_size=4)


class TestTrialSeed:
    """trial_seed 测试。"""

    def test_distinct_per_trial(self):
        """测试不同试验使用不同种子。"""
        assert trial_seed(42, 3) == 42 * SEED_STRIDE + 3
        assert len({trial_seed(1, i) for i in range(100)}) == 100


class TestFuzz:
    """fuzz 测试。"""

    def test_tnorm_stability_violated(self):
        """测试 T 范数语义违反 stability，且证据被最小化为单个陈述。"""
        report = fuzz(PropertyId.STABILITY, "tnorm-p", trials=30, config=SMALL, seed=1)
        assert report.trials + report.skipped == 30
        assert report.violations > 0
        witness = report.first_witness
        assert witness is not None
        assert witness.scenario.size == 1
        assert witness.clause == "σ(target) = τ(target)"
        verdict = check_property(PropertyId.STABILITY, "tnorm-p", witness.scenario)
        assert verdict.status == VerdictStatus.VIOLATED

    def test_dc_stability_holds(self):
        """测试 DC 语义在随机场景中满足 stability。"""
        report = fuzz(PropertyId.STABILITY, "dc-dfquad", trials=20, config=SMALL, seed=1)
        assert report.violations == 0
        assert report.first_witness is None
        assert report.triggered == report.trials

    def test_not_applicable(self):
        """测试结构化性质对抽象语义不运行试验。"""
        report = fuzz(PropertyId.PROVABILITY, "qem", trials=10, config=SMALL, seed=1)
        assert report.not_applicable
        assert report.trials == 0

    def test_deterministic(self):
        """测试相同种子得到相同结果。"""
        first = fuzz(PropertyId.NEUTRALITY, "dc-qem", trials=10, config=SMALL, seed=9)
        second = fuzz(PropertyId.NEUTRALITY, "dc-qem", trials=10, config=SMALL, seed=9)
        assert (first.trials, first.triggered, first.violations) == (
            second.trials,
            second.triggered,
            second.violations,
        )

    def test_workers_do_not_change_result(self):
        """测试进程数不影响结果。"""
        serial = fuzz(PropertyId.STABILITY, "tnorm-m", trials=8, config=SMALL, seed=4, workers=1)
        parallel = fuzz(PropertyId.STABILITY, "tnorm-m", trials=8, config=SMALL, seed=4, workers=2)
        assert (serial.trials, serial.triggered, serial.violations) == (
            parallel.trials,
            parallel.triggered,
            parallel.violations,
        )

    def test_defaults_from_settings(self, monkeypatch):
        """测试试验次数与种子默认取配置。"""
        monkeypatch.setenv("GRADUAL_FUZZ_TRIALS", "3")
        monkeypatch.setenv("GRADUAL_FUZZ_SEED", "5")
        report = fuzz(PropertyId.STABILITY, "dfquad", config=SMALL)
        assert report.seed == 5
        assert report.trials + report.skipped == 3
