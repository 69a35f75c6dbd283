"""语义 × 性质满足矩阵与矩阵层面的元检查。"""

import logging
from collections.abc import Iterable, Sequence

from gradualsemantics.config.settings import get_settings
from gradualsemantics.models.properties import (
    FixtureResult,
    MatrixCell,
    MatrixStatus,
    MetaCheck,
    PropertyId,
    SatisfactionMatrix,
    VerdictStatus,
)
from gradualsemantics.properties.definitions import PROPERTIES, get_property, is_applicable
from gradualsemantics.properties.fixtures import run_fixtures, select_fixtures
from gradualsemantics.properties.fuzzer import fuzz
from gradualsemantics.registry import SEMANTICS_NAMES, get_semantics

logger = logging.getLogger(__name__)

# 不可能同时全部满足的性质组合
INCOMPATIBLE_SETS: tuple[tuple[PropertyId, ...], ...] = (
    (PropertyId.REWRITING, PropertyId.STABILITY, PropertyId.TOP_STRENGTH_PREMISES),
    (PropertyId.PROVABILITY, PropertyId.STABILITY),
)


def _fixture_violation(results: Sequence[FixtureResult]) -> str | None:
    for result in results:
        if result.verdict.status == VerdictStatus.VIOLATED:
            return result.fixture
    return None


def _cell(
    semantics_name: str,
    pid: PropertyId,
    fixture_results: Sequence[FixtureResult],
    trials: int,
    seed: int,
    workers: int,
) -> MatrixCell:
    sem = get_semantics(semantics_name)
    if not is_applicable(pid, sem):
        return MatrixCell(semantics=sem.name, pid=pid, status=MatrixStatus.NOT_APPLICABLE)

    violating = _fixture_violation(fixture_results)
    if violating is not None:
        return MatrixCell(
            semantics=sem.name,
            pid=pid,
            status=MatrixStatus.VIOLATED_BY_FIXTURE,
            evidence=violating,
        )

    if trials < 1:
        return MatrixCell(semantics=sem.name, pid=pid, status=MatrixStatus.NO_COUNTEREXAMPLE)
    report = fuzz(pid, sem, trials=trials, seed=seed, workers=workers)
    if report.violations:
        logger.warning(f"{sem.name} 在随机试验中违反 {pid.value}: {report.violations} 次")
        return MatrixCell(
            semantics=sem.name,
            pid=pid,
            status=MatrixStatus.VIOLATED_BY_FUZZ,
            evidence=f"seed={seed}",
            trials=report.trials,
        )
    return MatrixCell(
        semantics=sem.name,
        pid=pid,
        status=MatrixStatus.NO_COUNTEREXAMPLE,
        evidence=f"seed={seed}",
        trials=report.trials,
    )


def _clean(matrix: SatisfactionMatrix, semantics: str, pid: PropertyId) -> bool:
    return matrix.cell(semantics, pid).status == MatrixStatus.NO_COUNTEREXAMPLE


def meta_checks(matrix: SatisfactionMatrix) -> list[MetaCheck]:
    """在完成的矩阵上检查性质之间的已知关系。

    只检查矩阵中包含全部相关列的组合。
    """
    checks: list[MetaCheck] = []
    columns = set(matrix.properties)

    if {PropertyId.PROVABILITY, PropertyId.WEAK_PROVABILITY} <= columns:
        offenders = [
            s
            for s in matrix.semantics
            if _clean(matrix, s, PropertyId.PROVABILITY)
            and not _clean(matrix, s, PropertyId.WEAK_PROVABILITY)
        ]
        checks.append(
            MetaCheck(
                name="provability-implies-weak-provability",
                passed=not offenders,
                detail=f"违反: {', '.join(offenders)}" if offenders else "",
            )
        )

    for group in INCOMPATIBLE_SETS:
        if not set(group) <= columns:
            continue
        offenders = [s for s in matrix.semantics if all(_clean(matrix, s, p) for p in group)]
        labels = "+".join(PROPERTIES[p].label for p in group)
        checks.append(
            MetaCheck(
                name=f"incompatible:{'+'.join(p.value for p in group)}",
                passed=not offenders,
                detail=f"{labels} 同时满足: {', '.join(offenders)}" if offenders else "",
            )
        )
    return checks


def satisfaction_matrix(
    semantics_names: Iterable[str] | None = None,
    pids: Iterable[PropertyId | str] | None = None,
    trials: int | None = None,
    seed: int | None = None,
    workers: int | None = None,
) -> SatisfactionMatrix:
    """计算满足矩阵。

    每个单元依次判定：不适用 → 夹具违反 → 随机试验违反 → 未找到反例。

    Args:
        semantics_names: 行，默认六种内置语义
        pids: 列，默认全部性质
        trials: 每个单元的随机试验次数，默认取配置 ``fuzz_trials``
        seed: 基础种子，默认取配置 ``fuzz_seed``
        workers: 随机试验进程数

    Returns:
        SatisfactionMatrix: 含元检查结果的矩阵

    Raises:
        UnknownSemanticsError: 语义名称未知
        UnknownPropertyError: 性质名称未知
    """
    settings = get_settings()
    names = list(SEMANTICS_NAMES if semantics_names is None else semantics_names)
    for name in names:
        get_semantics(name)
    columns = [get_property(p).pid for p in (PropertyId if pids is None else pids)]
    trials = settings.fuzz_trials if trials is None else trials
    seed = settings.fuzz_seed if seed is None else seed
    workers = settings.fuzz_workers if workers is None else workers

    matrix = SatisfactionMatrix(semantics=names, properties=columns)
    if not names or not columns:
        return matrix

    fixture_results = run_fixtures(select_fixtures(columns, names))
    logger.info(f"计算满足矩阵: {len(names)} 种语义 × {len(columns)} 个性质, 每格 {trials} 次试验")
    for name in names:
        for pid in columns:
            relevant = [r for r in fixture_results if r.semantics == name and r.pid == pid]
            cell = _cell(name, pid, relevant, trials, seed, workers)
            logger.info(f"{name} × {pid.value}: {cell.status.value}")
            matrix.cells.append(cell)

    matrix.meta_checks = meta_checks(matrix)
    for check in matrix.meta_checks:
        if not check.passed:
            logger.warning(f"元检查 {check.name} 未通过: {check.detail}")
    return matrix
