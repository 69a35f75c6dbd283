"""性质随机试验：生成场景、检查性质、最小化首个反例。"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor

from gradualsemantics.config.settings import get_settings
from gradualsemantics.graph.builder import remove_statement
from gradualsemantics.models.graph import StatementGraph
from gradualsemantics.models.properties import (
    FuzzConfig,
    FuzzReport,
    PropertyId,
    PropertyVerdict,
    PropertyWitness,
    Scenario,
    ScenarioKind,
    VerdictStatus,
)
from gradualsemantics.properties.checker import check_property
from gradualsemantics.properties.definitions import is_applicable
from gradualsemantics.properties.generators import random_scenario
from gradualsemantics.registry import NamedSemantics, get_semantics
from gradualsemantics.utils.exceptions import (
    EvaluationError,
    GraphStructureError,
    ScenarioError,
    ScenarioGenerationError,
)

logger = logging.getLogger(__name__)

# 相邻试验种子的间隔
SEED_STRIDE = 1_000_003


def trial_seed(seed: int, index: int) -> int:
    """第 index 次试验使用的种子，可用于单独复现该试验。"""
    return seed * SEED_STRIDE + index


def _run_trial(
    pid: PropertyId, semantics_name: str, config: FuzzConfig, seed: int
) -> PropertyVerdict | None:
    """运行单次试验；场景生成失败时返回 None。"""
    try:
        scenario = random_scenario(pid, config, seed)
    except ScenarioGenerationError:
        return None
    return check_property(pid, get_semantics(semantics_name), scenario)


def _rebuild(scenario: Scenario, graphs: list[StatementGraph]) -> Scenario:
    if scenario.kind == ScenarioKind.SINGLE_GRAPH:
        return Scenario.single(graphs[0], **scenario.focus)
    return Scenario.pair(graphs[0], graphs[1], **scenario.focus)


def minimize_witness(
    pid: PropertyId, semantics: NamedSemantics | str, witness: PropertyWitness
) -> PropertyWitness:
    """贪心删除非焦点陈述，保留仍被违反的最小场景。

    每次从所有图中删除同一个陈述，删除后场景不合法或性质不再被违反时撤销。

    Args:
        pid: 性质
        semantics: 语义或其名称
        witness: 原始证据

    Returns:
        PropertyWitness: 最小化后的证据
    """
    sem = get_semantics(semantics) if isinstance(semantics, str) else semantics
    current = witness
    protected = set(witness.scenario.focus.values())
    changed = True
    while changed:
        changed = False
        ids = sorted({sid for g in current.scenario.graphs for sid in g.ids} - protected)
        for sid in ids:
            try:
                graphs = [
                    remove_statement(g, sid) if sid in g else g for g in current.scenario.graphs
                ]
                candidate = _rebuild(current.scenario, graphs)
                verdict = check_property(pid, sem, candidate)
            except (GraphStructureError, ScenarioError, EvaluationError):
                continue
            if verdict.status == VerdictStatus.VIOLATED and verdict.witness is not None:
                current = verdict.witness
                changed = True
                break
    logger.debug(
        f"{pid.value}/{sem.name}: 证据从 {witness.scenario.size} 个陈述缩减到 "
        f"{current.scenario.size} 个"
    )
    return current


def fuzz(
    pid: PropertyId,
    semantics: NamedSemantics | str,
    trials: int | None = None,
    config: FuzzConfig | None = None,
    seed: int | None = None,
    workers: int | None = None,
) -> FuzzReport:
    """对 (语义, 性质) 运行随机试验。

    试验 i 的场景完全由 ``trial_seed(seed, i)`` 决定，因此报告与进程数无关。

    Args:
        pid: 性质
        semantics: 语义或其名称
        trials: 试验次数，默认取配置 ``fuzz_trials``
        config: 场景生成界限，默认由配置构造
        seed: 基础种子，默认取配置 ``fuzz_seed``
        workers: 进程数，默认取配置 ``fuzz_workers``

    Returns:
        FuzzReport: 试验报告，含首个违反的最小化证据
    """
    settings = get_settings()
    sem = get_semantics(semantics) if isinstance(semantics, str) else semantics
    seed = settings.fuzz_seed if seed is None else seed
    report = FuzzReport(pid=pid, semantics=sem.name, seed=seed)
    if not is_applicable(pid, sem):
        report.not_applicable = True
        return report

    trials = settings.fuzz_trials if trials is None else trials
    config = config or FuzzConfig.from_settings()
    workers = settings.fuzz_workers if workers is None else workers
    seeds = [trial_seed(seed, i) for i in range(trials)]
    logger.info(f"随机试验 {pid.value}/{sem.name}: {trials} 次, 种子 {seed}, 进程数 {workers}")

    start = time.perf_counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(
                pool.map(
                    _run_trial,
                    [pid] * trials,
                    [sem.name] * trials,
                    [config] * trials,
                    seeds,
                    chunksize=max(1, trials // (workers * 8)),
                )
            )
    else:
        verdicts = [_run_trial(pid, sem.name, config, s) for s in seeds]

    first: PropertyWitness | None = None
    for verdict in verdicts:
        if verdict is None:
            report.skipped += 1
            continue
        report.trials += 1
        if not verdict.vacuous:
            report.triggered += 1
        if verdict.status == VerdictStatus.VIOLATED:
            report.violations += 1
            if first is None:
                first = verdict.witness
    if first is not None:
        report.first_witness = minimize_witness(pid, sem, first)
    report.elapsed_seconds = time.perf_counter() - start

    if report.skipped:
        logger.warning(f"{pid.value}: {report.skipped} 次试验未能生成场景")
    logger.info(
        f"随机试验完成 {pid.value}/{sem.name}: 触发 {report.triggered}/{report.trials}, "
        f"违反 {report.violations}, 耗时 {report.elapsed_seconds:.2f} 秒"
    )
    return report
