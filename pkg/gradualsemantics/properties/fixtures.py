"""手工验证过的性质夹具。

每个夹具固定一个场景、期望判定以及若干期望强度。四舍五入到小数点后四位的
期望值使用 ``ROUNDED`` 容差，可精确计算的值使用默认容差。
"""

import logging
from collections.abc import Iterable

from gradualsemantics.models.properties import (
    ExpectedStrength,
    FixtureResult,
    PropertyFixture,
    PropertyId,
    Scenario,
    VerdictStatus,
)
from gradualsemantics.parsing.parser import load_sg
from gradualsemantics.properties.checker import check_property
from gradualsemantics.properties.definitions import get_property
from gradualsemantics.registry import get_semantics

logger = logging.getLogger(__name__)

ROUNDED = 5e-4

HOLDS = VerdictStatus.HOLDS
VIOLATED = VerdictStatus.VIOLATED

# 气候辩论：CO2 排放上升 (a) 与气温上升 (b) 支持气候变化由人类造成 (c)，
# a4 质疑 CO2 测量的可靠性 (d)，但 d 没有任何支持。
CLIMATE_DEBATE = """\
a1: a & b => c @ 0.8
a2: T => a @ 0.9
a3: T => b @ 0.6
a4: d => ~a @ {tau4}
"""

CLIMATE_REWRITING = CLIMATE_DEBATE.format(tau4=0.7) + """\
a5: a => e @ 1
a6: e & b => c @ 0.8
"""

CLIMATE_BOTTOM_STRENGTH = CLIMATE_DEBATE.format(tau4=0.8) + """\
a5: a => e @ 1
a8: e & f => ~b @ 0.5
"""

CLIMATE_MIRRORING = CLIMATE_DEBATE.format(tau4=0.8) + """\
a5: a => e @ 0.5
a10: ~a => ~e @ 0.5
"""

NEUTRALITY_BASE = """\
a1: a => b @ 1
a2: T => a @ 1
a3: T => c @ 1
a4: d => ~c @ 1
a5: T => d @ 1
"""

# a7 攻击 a4，a4 支持 a1 的攻击者 a5
WEAKENED_PREMISE = """\
a1: a & b => c @ {t1}
a2: T => a @ {t1}
a3: T => b @ {t1}
a4: d => e @ {t4}
a5: e => ~b @ {t5}
a6: T => d @ {t6}
a7: f => ~d @ {t7}
a8: T => f @ {t8}
"""

MIRRORING_PAIR = """\
a1: a => b @ 0.5
a2: T => a @ {t2}
a3: ~a => c @ 0.5
a4: d => ~a @ 0.5
a5: T => d @ 0.5
"""

REWRITING_CHAIN = """\
a1: b & c => a @ 0.5
a2: b => d @ 1
a3: c & d => a @ 0.5
"""

# a5 只出现在攻击者 a4 的 CST 中
ATTACK_CHAIN = """\
a1: b => a @ 0.5
a2: T => b @ 0
a3: c & d => b @ 0.5
a4: c => ~b @ 1
"""

# a4 出现在 a1 的 CST 中，同时支持没有 CST 的攻击者 a3
SUPPORT_CHAIN = """\
a1: b => a @ 0.5
a2: c => b @ 1
a3: c & d => ~b @ 0.5
"""


def _expect(statement: str, value: float, graph: int = 0, tol: float = 1e-9) -> ExpectedStrength:
    return ExpectedStrength(graph=graph, statement=statement, value=value, tolerance=tol)


def _weakened(t1: float, t4: float, t5: float, t6: float, t7: float, t8: float) -> str:
    return WEAKENED_PREMISE.format(t1=t1, t4=t4, t5=t5, t6=t6, t7=t7, t8=t8)


def _tnorm_shared(name: str, label: str, chain_strength: float) -> list[PropertyFixture]:
    """T-norm-p 与 T-norm-m 共用的夹具。"""
    return [
        PropertyFixture(
            name=f"{label}-stability-unsupported-premise",
            pid=PropertyId.STABILITY,
            semantics=name,
            scenario=Scenario.single(load_sg("a1: b => a @ 1\n"), target="a1"),
            expected=VIOLATED,
            strengths=[_expect("a1", 0.0)],
            source="孤立陈述 ⟨b, a⟩，τ = 1，没有 CST",
        ),
        PropertyFixture(
            name=f"{label}-neutrality-defeated-attacker",
            pid=PropertyId.NEUTRALITY,
            semantics=name,
            scenario=Scenario.pair(
                load_sg(NEUTRALITY_BASE),
                load_sg(NEUTRALITY_BASE + "a6: c => ~a @ 0.5\n"),
                added="a6",
                target="a1",
            ),
            expected=VIOLATED,
            strengths=[
                _expect("a1", 1.0),
                _expect("a6", 0.0, graph=1),
                _expect("a1", 0.5, graph=1),
            ],
            source="加入被 a4 完全击败的攻击者 a6 = ⟨c, ¬a⟩",
            note="a6 的强度为 0，但其 CST 的内在强度仍削弱 a1",
        ),
        PropertyFixture(
            name=f"{label}-top-strength-weight-cap",
            pid=PropertyId.TOP_STRENGTH_PREMISES,
            semantics=name,
            scenario=Scenario.single(
                load_sg("a1: a => b @ 0.8\na2: T => a @ 1\n"), target="a1"
            ),
            expected=VIOLATED,
            strengths=[_expect("a2", 1.0), _expect("a1", 0.8)],
            source="前提被强度为 1 的事实完全支持，τ(a1) = 0.8",
        ),
        PropertyFixture(
            name=f"{label}-top-strength-climate-effect",
            pid=PropertyId.TOP_STRENGTH_PREMISES,
            semantics=name,
            scenario=Scenario.single(
                load_sg("a2: T => a @ 1\na5: a => e @ 0.8\n"), target="a5"
            ),
            expected=VIOLATED,
            strengths=[_expect("a5", 0.8)],
            source="a5 = ⟨a, e⟩ 的前提被事实 ⟨⊤, a⟩ 完全支持",
        ),
        PropertyFixture(
            name=f"{label}-rewriting-climate-chain",
            pid=PropertyId.REWRITING,
            semantics=name,
            scenario=Scenario.single(
                load_sg(CLIMATE_REWRITING), long="a1", bridge="a5", short="a6"
            ),
            expected=HOLDS,
            strengths=[_expect("a1", chain_strength), _expect("a6", chain_strength)],
            source="气候辩论加入 a5 = ⟨a, e⟩ 与 a6 = ⟨e ∧ b, c⟩",
        ),
        PropertyFixture(
            name=f"{label}-bottom-strength-unsupported",
            pid=PropertyId.BOTTOM_STRENGTH_PREMISE,
            semantics=name,
            scenario=Scenario.single(
                load_sg(CLIMATE_BOTTOM_STRENGTH + "a9: T => ~f @ 1\n"), target="a8"
            ),
            expected=HOLDS,
            strengths=[_expect("a8", 0.0)],
            source="a8 = ⟨e ∧ f, ¬b⟩ 被事实 a9 = ⟨⊤, ¬f⟩ 攻击",
        ),
    ]


def _tnorm_fixtures() -> list[PropertyFixture]:
    fixtures = _tnorm_shared("tnorm-p", "tp", 0.432) + _tnorm_shared(
        "tnorm-m", "tm", 0.6
    )
    fixtures += [
        PropertyFixture(
            name="tp-stability-climate-doubt",
            pid=PropertyId.STABILITY,
            semantics="tnorm-p",
            scenario=Scenario.single(load_sg(CLIMATE_DEBATE.format(tau4=0.8)), target="a4"),
            expected=VIOLATED,
            strengths=[_expect("a4", 0.0), _expect("a1", 0.432)],
            source="a4 = ⟨d, ¬a⟩ 没有攻击者与支持者，也没有 CST",
        ),
        PropertyFixture(
            name="tp-weakened-premise-indirect",
            pid=PropertyId.WEAKENED_PREMISE,
            semantics="tnorm-p",
            scenario=Scenario.pair(
                load_sg(_weakened(0.5, 0.5, 0.5, 0.5, 0.9, 1)),
                load_sg(_weakened(0.5, 0.4, 0.5, 0.5, 0.5, 1)),
                target="a1",
                changed="a5",
            ),
            expected=VIOLATED,
            strengths=[
                _expect("a1", 0.109375),
                _expect("a5", 0.0125),
                _expect("a1", 0.1125, graph=1),
                _expect("a5", 0.05, graph=1),
            ],
            source="降低 τ(a4) 并削弱 a7：攻击者 a5 变强，a1 也变强",
        ),
        PropertyFixture(
            name="tm-weakened-premise-indirect",
            pid=PropertyId.WEAKENED_PREMISE,
            semantics="tnorm-m",
            scenario=Scenario.pair(
                load_sg(_weakened(0.8, 0.5, 0.5, 0.5, 1, 1)),
                load_sg(_weakened(0.8, 0.4, 0.4, 0.4, 0.1, 0.1)),
                target="a1",
                changed="a5",
            ),
            expected=VIOLATED,
            strengths=[
                _expect("a1", 0.5),
                _expect("a5", 0.0),
                _expect("a1", 0.6, graph=1),
                _expect("a5", 0.4, graph=1),
            ],
            source="a1 的 CST 权重取 0.8，min 的结果由攻击项决定",
        ),
        PropertyFixture(
            name="tm-weakened-premise-saturated",
            pid=PropertyId.WEAKENED_PREMISE,
            semantics="tnorm-m",
            scenario=Scenario.pair(
                load_sg(_weakened(0.5, 0.5, 0.5, 0.5, 1, 1)),
                load_sg(_weakened(0.5, 0.4, 0.4, 0.4, 0.1, 0.1)),
                target="a1",
                changed="a5",
            ),
            expected=HOLDS,
            strengths=[
                _expect("a1", 0.5),
                _expect("a5", 0.0),
                _expect("a1", 0.5, graph=1),
                _expect("a5", 0.4, graph=1),
            ],
            source="a1 的 CST 权重取 0.5",
            note="min 在 0.5 处饱和，攻击项变化不可见",
        ),
        PropertyFixture(
            name="tp-mirroring-asymmetric",
            pid=PropertyId.MIRRORING,
            semantics="tnorm-p",
            scenario=Scenario.single(
                load_sg(MIRRORING_PAIR.format(t2=0.5)), first="a1", second="a3"
            ),
            expected=VIOLATED,
            strengths=[_expect("a1", 0.1875), _expect("a3", 0.0625)],
            source="前提互为否定的 a1 = ⟨a, b⟩ 与 a3 = ⟨¬a, c⟩，全部权重为 0.5",
        ),
        PropertyFixture(
            name="tm-mirroring-balanced",
            pid=PropertyId.MIRRORING,
            semantics="tnorm-m",
            scenario=Scenario.single(
                load_sg(MIRRORING_PAIR.format(t2=0.5)), first="a1", second="a3"
            ),
            expected=HOLDS,
            strengths=[_expect("a1", 0.5), _expect("a3", 0.5)],
            source="同上，全部权重为 0.5",
            note="所有 min 都取到 0.5，恰好互补",
        ),
        PropertyFixture(
            name="tm-mirroring-asymmetric",
            pid=PropertyId.MIRRORING,
            semantics="tnorm-m",
            scenario=Scenario.single(
                load_sg(MIRRORING_PAIR.format(t2=1)), first="a1", second="a3"
            ),
            expected=VIOLATED,
            strengths=[_expect("a1", 0.5), _expect("a3", 0.0)],
            source="同上，τ(a2) = 1",
        ),
    ]
    return fixtures


def _dc_shared(name: str, label: str, rewriting_short: float) -> list[PropertyFixture]:
    """∧D 与 ∧Q 共用的夹具。"""
    return [
        PropertyFixture(
            name=f"{label}-rewriting-short-chain",
            pid=PropertyId.REWRITING,
            semantics=name,
            scenario=Scenario.single(load_sg(REWRITING_CHAIN), long="a1", bridge="a2", short="a3"),
            expected=VIOLATED,
            strengths=[
                _expect("a1", 0.5),
                _expect("a2", 1.0),
                _expect("a3", rewriting_short, tol=ROUNDED),
            ],
            source="a1 = ⟨b ∧ c, a⟩，a2 = ⟨b, d⟩，a3 = ⟨c ∧ d, a⟩",
        ),
        PropertyFixture(
            name=f"{label}-provability-unsupported",
            pid=PropertyId.PROVABILITY,
            semantics=name,
            scenario=Scenario.single(load_sg("a1: b => a @ 0.5\n"), target="a1"),
            expected=VIOLATED,
            strengths=[_expect("a1", 0.5)],
            source="孤立陈述 ⟨b, a⟩，τ = 0.5",
        ),
        PropertyFixture(
            name=f"{label}-weak-provability-zero-weight",
            pid=PropertyId.WEAK_PROVABILITY,
            semantics=name,
            scenario=Scenario.single(
                load_sg("a1: b & c => a @ 0\na2: T => c @ 1\n"), target="a1"
            ),
            expected=HOLDS,
            strengths=[_expect("a1", 0.0)],
            source="τ = 0 且 b 没有支持者",
        ),
        PropertyFixture(
            name=f"{label}-stability-climate-doubt",
            pid=PropertyId.STABILITY,
            semantics=name,
            scenario=Scenario.single(load_sg(CLIMATE_DEBATE.format(tau4=0.8)), target="a4"),
            expected=HOLDS,
            strengths=[_expect("a4", 0.8)],
            source="a4 = ⟨d, ¬a⟩ 没有攻击者与支持者",
        ),
        PropertyFixture(
            name=f"{label}-neutrality-zero-fact",
            pid=PropertyId.NEUTRALITY,
            semantics=name,
            scenario=Scenario.pair(
                load_sg(CLIMATE_DEBATE.format(tau4=0.8)),
                load_sg(CLIMATE_DEBATE.format(tau4=0.8) + "a7: T => d @ 0\n"),
                added="a7",
                target="a4",
            ),
            expected=HOLDS,
            strengths=[_expect("a4", 0.8), _expect("a7", 0.0, graph=1), _expect("a4", 0.8, graph=1)],
            source="加入权重为 0 的事实 a7 = ⟨⊤, d⟩",
        ),
        PropertyFixture(
            name=f"{label}-mirroring-negated-pair",
            pid=PropertyId.MIRRORING,
            semantics=name,
            scenario=Scenario.single(
                load_sg(MIRRORING_PAIR.format(t2=0.5)), first="a1", second="a3"
            ),
            expected=HOLDS,
            source="前提互为否定的 a1 = ⟨a, b⟩ 与 a3 = ⟨¬a, c⟩，全部权重为 0.5",
        ),
    ]


def _dc_fixtures() -> list[PropertyFixture]:
    fixtures = _dc_shared("dc-dfquad", "dcd", 0.7071) + _dc_shared("dc-qem", "dcq", 0.6036)
    fixtures += [
        PropertyFixture(
            name="dcd-rewriting-climate-chain",
            pid=PropertyId.REWRITING,
            semantics="dc-dfquad",
            scenario=Scenario.single(
                load_sg(CLIMATE_REWRITING), long="a1", bridge="a5", short="a6"
            ),
            expected=VIOLATED,
            strengths=[
                _expect("a1", 0.8769, tol=ROUNDED),
                _expect("a5", 1.0),
                _expect("a6", 0.9578, tol=ROUNDED),
            ],
            source="更长的推理链累积了更多证据",
        ),
        PropertyFixture(
            name="dcd-provability-climate-doubt",
            pid=PropertyId.PROVABILITY,
            semantics="dc-dfquad",
            scenario=Scenario.single(load_sg(CLIMATE_DEBATE.format(tau4=0.7)), target="a4"),
            expected=VIOLATED,
            strengths=[
                _expect("a4", 0.7),
                _expect("a1", 0.8769, tol=ROUNDED),
            ],
            source="d 没有支持者，a4 的强度退回其权重",
        ),
        PropertyFixture(
            name="dcd-bottom-strength-defeated-literal",
            pid=PropertyId.BOTTOM_STRENGTH_PREMISE,
            semantics="dc-dfquad",
            scenario=Scenario.single(
                load_sg(CLIMATE_BOTTOM_STRENGTH + "a9: T => ~f @ 1\n"), target="a8"
            ),
            expected=HOLDS,
            strengths=[_expect("a8", 0.0), _expect("a5", 1.0)],
            source="a8 = ⟨e ∧ f, ¬b⟩ 的前提 f 被事实 a9 = ⟨⊤, ¬f⟩ 完全否定",
        ),
        PropertyFixture(
            name="dcd-bottom-strength-fact-attacker",
            pid=PropertyId.BOTTOM_STRENGTH_PREMISE,
            semantics="dc-dfquad",
            scenario=Scenario.single(load_sg("a1: b => a @ 0.5\na2: T => ~b @ 1\n"), target="a1"),
            expected=HOLDS,
            strengths=[_expect("a1", 0.0)],
            source="a1 = ⟨b, a⟩ 被事实 ⟨⊤, ¬b⟩ 攻击",
        ),
        PropertyFixture(
            name="dcq-bottom-strength-fact-attacker",
            pid=PropertyId.BOTTOM_STRENGTH_PREMISE,
            semantics="dc-qem",
            scenario=Scenario.single(load_sg("a1: b => a @ 0.5\na2: T => ~b @ 1\n"), target="a1"),
            expected=VIOLATED,
            strengths=[_expect("a2", 1.0), _expect("a1", 0.25)],
            source="a1 = ⟨b, a⟩ 被事实 ⟨⊤, ¬b⟩ 攻击",
            note="QEM 在强度端点处不饱和",
        ),
        PropertyFixture(
            name="dcd-top-strength-fact-supporter",
            pid=PropertyId.TOP_STRENGTH_PREMISES,
            semantics="dc-dfquad",
            scenario=Scenario.single(load_sg("a1: b => a @ 0.5\na2: T => b @ 1\n"), target="a1"),
            expected=HOLDS,
            strengths=[_expect("a1", 1.0)],
            source="a1 = ⟨b, a⟩ 被事实 ⟨⊤, b⟩ 支持",
        ),
        PropertyFixture(
            name="dcq-top-strength-fact-supporter",
            pid=PropertyId.TOP_STRENGTH_PREMISES,
            semantics="dc-qem",
            scenario=Scenario.single(load_sg("a1: b => a @ 0.5\na2: T => b @ 1\n"), target="a1"),
            expected=VIOLATED,
            strengths=[_expect("a2", 1.0), _expect("a1", 0.75)],
            source="a1 = ⟨b, a⟩ 被事实 ⟨⊤, b⟩ 支持",
        ),
        PropertyFixture(
            name="dcd-top-strength-climate-effect",
            pid=PropertyId.TOP_STRENGTH_PREMISES,
            semantics="dc-dfquad",
            scenario=Scenario.single(
                load_sg("a2: T => a @ 1\na5: a => e @ 0.8\n"), target="a5"
            ),
            expected=HOLDS,
            strengths=[_expect("a5", 1.0)],
            source="a5 = ⟨a, e⟩ 的前提被事实 ⟨⊤, a⟩ 完全支持",
        ),
        PropertyFixture(
            name="dcd-mirroring-climate-effect",
            pid=PropertyId.MIRRORING,
            semantics="dc-dfquad",
            scenario=Scenario.single(load_sg(CLIMATE_MIRRORING), first="a5", second="a10"),
            expected=HOLDS,
            strengths=[_expect("a5", 0.55), _expect("a10", 0.45)],
            source="a5 = ⟨a, e⟩ 与 a10 = ⟨¬a, ¬e⟩，权重均为 0.5",
        ),
        PropertyFixture(
            name="dcq-mirroring-values",
            pid=PropertyId.MIRRORING,
            semantics="dc-qem",
            scenario=Scenario.single(
                load_sg(MIRRORING_PAIR.format(t2=0.5)), first="a1", second="a3"
            ),
            expected=HOLDS,
            strengths=[
                _expect("a4", 0.6),
                _expect("a1", 0.49505, tol=ROUNDED),
                _expect("a3", 0.50495, tol=ROUNDED),
            ],
            source="E = ∓0.1，h(0.1) = 0.01 / 1.01",
        ),
    ]
    fixtures += _support_tree_fixtures()
    return fixtures


def _support_tree_fixtures() -> list[PropertyFixture]:
    """基于 CST 的性质：∧D 与 ∧Q 都违反。"""
    fixtures: list[PropertyFixture] = []
    values = {
        "dc-dfquad": ("dcd", (0.3018, 0.3121), (0.6982, 0.6879), (0.25, 0.3018), (0.75, 0.6982)),
        "dc-qem": ("dcq", (0.4131, 0.4173), (0.5869, 0.5827), (0.4, 0.4131), (0.6, 0.5869)),
    }
    for name, (label, ar, sr, am, sm) in values.items():
        cases = (
            (
                PropertyId.ATTACK_REINFORCEMENT,
                Scenario.pair(
                    load_sg(ATTACK_CHAIN + "a5: T => c @ 0.5\n"),
                    load_sg(ATTACK_CHAIN + "a5: T => c @ 0.6\n"),
                    raised="a5",
                    target="a1",
                ),
                ar,
                "提高攻击者 a4 的 CST 成员 a5 的权重，同时也加强了 a3",
            ),
            (
                PropertyId.SUPPORT_REINFORCEMENT,
                Scenario.pair(
                    load_sg(SUPPORT_CHAIN + "a4: T => c @ 0.5\n"),
                    load_sg(SUPPORT_CHAIN + "a4: T => c @ 0.6\n"),
                    raised="a4",
                    target="a1",
                ),
                sr,
                "提高 a1 的 CST 成员 a4 的权重，同时也加强了不完整的攻击者 a3",
            ),
            (
                PropertyId.ATTACK_MONOTONICITY,
                Scenario.pair(
                    load_sg(ATTACK_CHAIN),
                    load_sg(ATTACK_CHAIN + "a5: T => c @ 0.5\n"),
                    added="a5",
                    target="a1",
                ),
                am,
                "加入攻击者 a4 的 CST 成员 a5",
            ),
            (
                PropertyId.SUPPORT_MONOTONICITY,
                Scenario.pair(
                    load_sg(SUPPORT_CHAIN),
                    load_sg(SUPPORT_CHAIN + "a4: T => c @ 0.5\n"),
                    added="a4",
                    target="a1",
                ),
                sm,
                "加入 a1 的 CST 成员 a4",
            ),
        )
        for pid, scenario, (before, after), source in cases:
            fixtures.append(
                PropertyFixture(
                    name=f"{label}-{pid.value}",
                    pid=pid,
                    semantics=name,
                    scenario=scenario,
                    expected=VIOLATED,
                    strengths=[
                        _expect("a1", before, tol=ROUNDED),
                        _expect("a1", after, graph=1, tol=ROUNDED),
                    ],
                    source=source,
                )
            )
    return fixtures


def _abstract_fixtures() -> list[PropertyFixture]:
    fixtures: list[PropertyFixture] = []
    for name, label in (("dfquad", "d"), ("qem", "q")):
        fixtures += [
            PropertyFixture(
                name=f"{label}-stability-climate-doubt",
                pid=PropertyId.STABILITY,
                semantics=name,
                scenario=Scenario.single(load_sg(CLIMATE_DEBATE.format(tau4=0.8)), target="a4"),
                expected=HOLDS,
                strengths=[_expect("a4", 0.8)],
                source="a4 没有攻击者与支持者",
            ),
            PropertyFixture(
                name=f"{label}-rewriting-not-applicable",
                pid=PropertyId.REWRITING,
                semantics=name,
                scenario=Scenario.single(load_sg(REWRITING_CHAIN), long="a1", bridge="a2", short="a3"),
                expected=VerdictStatus.NOT_APPLICABLE,
                source="抽象语义不检查陈述内部结构",
            ),
        ]
    return fixtures


def fixture_suite() -> list[PropertyFixture]:
    """全部内置夹具。"""
    return _tnorm_fixtures() + _dc_fixtures() + _abstract_fixtures()


def select_fixtures(
    pids: Iterable[PropertyId] | None = None, semantics: Iterable[str] | None = None
) -> list[PropertyFixture]:
    """按性质与语义筛选夹具。"""
    wanted_pids = {get_property(p).pid for p in pids} if pids is not None else None
    wanted_sems = set(semantics) if semantics is not None else None
    return [
        f
        for f in fixture_suite()
        if (wanted_pids is None or f.pid in wanted_pids)
        and (wanted_sems is None or f.semantics in wanted_sems)
    ]


def run_fixture(fixture: PropertyFixture) -> FixtureResult:
    """运行单个夹具并比对判定与期望强度。"""
    semantics = get_semantics(fixture.semantics)
    verdict = check_property(fixture.pid, semantics, fixture.scenario)
    mismatches: list[str] = []
    if fixture.strengths:
        strengths = [semantics.evaluate(graph) for graph in fixture.scenario.graphs]
        for expected in fixture.strengths:
            actual = strengths[expected.graph].get(expected.statement)
            if actual is None or abs(actual - expected.value) > expected.tolerance:
                graph = "G′" if expected.graph else "G"
                mismatches.append(
                    f"{graph} 中 σ({expected.statement}) = {actual}，期望 {expected.value}"
                )
    result = FixtureResult(
        fixture=fixture.name,
        pid=fixture.pid,
        semantics=fixture.semantics,
        expected=fixture.expected,
        verdict=verdict,
        mismatches=mismatches,
    )
    if not result.passed:
        logger.warning(f"夹具 {fixture.name} 未通过: {verdict.status.value} {mismatches}")
    return result


def run_fixtures(fixtures: Iterable[PropertyFixture] | None = None) -> list[FixtureResult]:
    """运行一组夹具，默认运行全部。"""
    return [run_fixture(f) for f in (fixture_suite() if fixtures is None else fixtures)]
