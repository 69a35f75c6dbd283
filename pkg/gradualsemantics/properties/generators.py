"""随机陈述图与性质场景生成。

原子按下标排序，陈述的结论原子总是排在其全部前提原子之后，因此生成的图必然
无环。每个性质有自己的构造方式，使结构前件以较高概率成立；依赖强度的前件由
检查器判断。
"""

import logging
import random
from collections.abc import Callable, Sequence

from gradualsemantics.graph.builder import (
    add_statement,
    ancestors,
    build_graph,
    exists_path,
    remove_statement,
    reweight,
)
from gradualsemantics.models.graph import StatementGraph
from gradualsemantics.models.logic import TOP, Literal, Statement, make_statement, negate
from gradualsemantics.models.properties import FuzzConfig, PropertyId, Scenario
from gradualsemantics.properties.validators import support_tree_condition, validate_scenario
from gradualsemantics.structured.support_trees import all_csts
from gradualsemantics.utils.exceptions import (
    CSTLimitExceededError,
    GraphStructureError,
    MalformedScenarioError,
    ScenarioGenerationError,
)

logger = logging.getLogger(__name__)

WEIGHT_GRID = tuple(i / 10 for i in range(11))
FRESH_ATOM = "fresh"


class _Builder:
    """单次尝试中使用的随机源与编号器。"""

    def __init__(self, rng: random.Random, config: FuzzConfig) -> None:
        self.rng = rng
        self.config = config
        self.atoms = [f"p{i}" for i in range(config.atom_pool_size)]
        self._counter = 0

    def next_id(self, prefix: str = "s") -> str:
        self._counter += 1
        return f"{prefix}{self._counter}"

    def weight(self) -> float:
        if self.rng.random() < self.config.continuous_weight_share:
            return self.rng.random()
        return self.rng.choice(WEIGHT_GRID)

    def literal(self, atom: str) -> Literal:
        return Literal(atom=atom, negated=self.rng.random() < 0.5)

    def premise_below(self, rank: int, allow_top: bool = True) -> list[Literal]:
        """从排名低于 rank 的原子中随机取前提；可能为 ⊤。"""
        if rank == 0 or (allow_top and self.rng.random() < 0.25):
            return [TOP]
        size = self.rng.randint(1, min(rank, self.config.max_premise_size))
        return [self.literal(atom) for atom in self.rng.sample(self.atoms[:rank], size)]

    def statement(self, rank: int | None = None, prefix: str = "s") -> Statement:
        """结论原子排名为 rank 的随机陈述。"""
        if rank is None:
            rank = self.rng.randrange(len(self.atoms))
        return make_statement(
            self.next_id(prefix), self.premise_below(rank), self.literal(self.atoms[rank])
        )


def _assemble(statements: list[Statement], weights: dict[str, float]) -> StatementGraph:
    """去掉重复陈述后建图。"""
    seen: set[tuple] = set()
    kept: list[Statement] = []
    for statement in statements:
        if statement.key not in seen:
            seen.add(statement.key)
            kept.append(statement)
    return build_graph(kept, {s.id: weights[s.id] for s in kept})


def _random_graph(builder: _Builder) -> StatementGraph:
    rng, config = builder.rng, builder.config
    count = rng.randint(2, config.max_statements)
    statements = [builder.statement() for _ in range(count)]
    claims = {s.claim for s in statements}
    # 部分无支持的前提文字补上事实，使 CST 存在
    for literal in sorted({i for s in statements for i in s.prem}, key=lambda i: i.sort_key):
        if literal not in claims and rng.random() >= config.unsupported_premise_share:
            statements.append(make_statement(builder.next_id("f"), [TOP], literal))
            claims.add(literal)
    weights = {s.id: builder.weight() for s in statements}
    return _assemble(statements, weights)


def random_graph(config: FuzzConfig | None = None, seed: int | None = None) -> StatementGraph:
    """生成随机无环陈述图。

    Args:
        config: 生成界限，默认由全局配置构造
        seed: 随机种子

    Returns:
        StatementGraph: 随机陈述图
    """
    builder = _Builder(random.Random(seed), config or FuzzConfig.from_settings())
    return _random_graph(builder)


def _pick(rng: random.Random, items: Sequence[str]) -> str | None:
    return rng.choice(list(items)) if items else None


def _with_premise(graph: StatementGraph) -> list[str]:
    return [s.id for s in graph.statements if s.prem]


def _rank(builder: _Builder, literal: Literal) -> int:
    return builder.atoms.index(literal.atom)


# 各性质的构造，返回 None 表示本次尝试放弃


def _directionality(b: _Builder) -> Scenario | None:
    before = _random_graph(b)
    added = b.statement(prefix="n")
    after = add_statement(before, added, b.weight())
    candidates = [sid for sid in before.ids if not exists_path(after, added.id, sid)]
    target = _pick(b.rng, candidates)
    if target is None:
        return None
    return Scenario.pair(before, after, added=added.id, target=target)


def _rewriting(b: _Builder) -> Scenario | None:
    background = _random_graph(b)
    rank = b.rng.randrange(1, len(b.atoms))
    long_prem = b.premise_below(rank, allow_top=False)
    claim = b.literal(b.atoms[rank])
    y = b.rng.choice(long_prem)
    rest = [item for item in long_prem if item != y] or [TOP]
    fresh = Literal(atom=FRESH_ATOM)
    weight = b.weight()
    long_s = make_statement(b.next_id("r"), long_prem, claim)
    bridge = make_statement(b.next_id("r"), rest, fresh)
    short = make_statement(b.next_id("r"), [fresh, y], claim)
    statements = [*background.statements, long_s, bridge, short]
    weights = {**background.weights, long_s.id: weight, bridge.id: 1.0, short.id: weight}
    graph = build_graph(statements, weights)
    return Scenario.single(graph, long=long_s.id, bridge=bridge.id, short=short.id)


def _provability(pid: PropertyId) -> Callable[[_Builder], Scenario | None]:
    def build(b: _Builder) -> Scenario | None:
        background = _random_graph(b)
        rank = b.rng.randrange(len(b.atoms))
        extra = [item for item in b.premise_below(rank) if not item.is_top]
        premise = [Literal(atom=FRESH_ATOM, negated=b.rng.random() < 0.5), *extra]
        target = make_statement(b.next_id("t"), premise, b.literal(b.atoms[rank]))
        weight = 0.0 if pid == PropertyId.WEAK_PROVABILITY else b.weight()
        graph = add_statement(background, target, weight)
        return Scenario.single(graph, target=target.id)

    return build


def _stability(b: _Builder) -> Scenario | None:
    background = _random_graph(b)
    if b.rng.random() < 0.25:
        premise: list[Literal] = [TOP]
    else:
        premise = [
            Literal(atom=f"{FRESH_ATOM}{i}", negated=b.rng.random() < 0.5)
            for i in range(b.rng.randint(1, b.config.max_premise_size))
        ]
    target = make_statement(b.next_id("t"), premise, Literal(atom="isolated"))
    graph = add_statement(background, target, b.weight())
    return Scenario.single(graph, target=target.id)


def _addition(pid: PropertyId) -> Callable[[_Builder], Scenario | None]:
    def build(b: _Builder) -> Scenario | None:
        before = _random_graph(b)
        target = _pick(b.rng, _with_premise(before))
        if target is None:
            return None
        item = b.rng.choice(before.statement(target).prem)
        if pid == PropertyId.ATTACKED_PREMISE:
            claim = negate(item)
        elif pid == PropertyId.SUPPORTED_PREMISE:
            claim = item
        else:
            claim = b.rng.choice([item, negate(item)])
        added = make_statement(b.next_id("n"), b.premise_below(_rank(b, item)), claim)
        weight = b.weight()
        if pid == PropertyId.NEUTRALITY and b.rng.random() < 0.5:
            weight = 0.0
        after = add_statement(before, added, weight)
        return Scenario.pair(before, after, added=added.id, target=target)

    return build


def _changed_neighbour(pid: PropertyId) -> Callable[[_Builder], Scenario | None]:
    def build(b: _Builder) -> Scenario | None:
        before = _random_graph(b)
        pool = [
            (sid, n)
            for sid in before.ids
            for n in (
                before.attackers(sid)
                if pid == PropertyId.WEAKENED_PREMISE
                else before.supporters(sid)
            )
        ]
        if not pool:
            return None
        target, changed = b.rng.choice(pool)
        shared: set[str] = {target}
        for other in before.neighbours(target):
            if other != changed:
                shared |= {other} | ancestors(before, other)
        exclusive = sorted(({changed} | ancestors(before, changed)) - shared)
        if not exclusive:
            return None
        picked = b.rng.sample(exclusive, b.rng.randint(1, len(exclusive)))
        after = reweight(before, {sid: b.weight() for sid in picked})
        return Scenario.pair(before, after, target=target, changed=changed)

    return build


def _bottom_strength(b: _Builder) -> Scenario | None:
    background = _random_graph(b)
    claims = {s.claim for s in background.statements}
    options = [
        (sid, item)
        for sid in _with_premise(background)
        for item in background.statement(sid).prem
        if item not in claims
    ]
    if not options:
        return None
    target, item = b.rng.choice(options)
    defeater = make_statement(b.next_id("d"), [TOP], negate(item))
    graph = add_statement(background, defeater, 1.0)
    return Scenario.single(graph, target=target)


def _top_strength(b: _Builder) -> Scenario | None:
    background = _random_graph(b)
    target = _pick(b.rng, _with_premise(background))
    if target is None:
        return None
    prem = background.statement(target).prem
    opposed = {negate(item) for item in prem}
    graph = background
    for statement in background.statements:
        if statement.claim in opposed:
            graph = remove_statement(graph, statement.id)
    for item in prem:
        existing = [s.id for s in graph.statements if s.is_fact and s.claim == item]
        if existing:
            graph = reweight(graph, {existing[0]: 1.0})
        else:
            graph = add_statement(graph, make_statement(b.next_id("f"), [TOP], item), 1.0)
    return Scenario.single(graph, target=target)


def _mirroring(b: _Builder) -> Scenario | None:
    background = _random_graph(b)
    rank = b.rng.randrange(len(b.atoms) - 1)
    item = b.literal(b.atoms[rank])
    above = b.atoms[rank + 1 :]
    first = make_statement(b.next_id("m"), [item], b.literal(b.rng.choice(above)))
    second = make_statement(b.next_id("m"), [negate(item)], b.literal(b.rng.choice(above)))
    extras = [
        make_statement(b.next_id("k"), b.premise_below(rank), b.rng.choice([item, negate(item)]))
        for _ in range(b.rng.randint(0, 2))
    ]
    statements = [*background.statements, first, second, *extras]
    weights = {**background.weights, first.id: 0.5, second.id: 0.5}
    weights.update({s.id: b.weight() for s in extras})
    graph = _assemble(statements, weights)
    if first.id not in graph or second.id not in graph:
        return None
    return Scenario.single(graph, first=first.id, second=second.id)


def _reinforcement(pid: PropertyId) -> Callable[[_Builder], Scenario | None]:
    def build(b: _Builder) -> Scenario | None:
        before = _random_graph(b)
        forest = all_csts(before)
        pairs = [(m, t) for m in before.ids for t in before.ids]
        b.rng.shuffle(pairs)
        for raised, target in pairs:
            if support_tree_condition(pid, before, forest, raised, target):
                old = before.weights[raised]
                after = reweight(before, {raised: b.rng.uniform(old, 1.0)})
                return Scenario.pair(before, after, raised=raised, target=target)
        return None

    return build


def _monotonicity(pid: PropertyId) -> Callable[[_Builder], Scenario | None]:
    def build(b: _Builder) -> Scenario | None:
        after = _random_graph(b)
        forest = all_csts(after)
        pairs = [(m, t) for m in after.ids for t in after.ids]
        b.rng.shuffle(pairs)
        for added, target in pairs:
            if support_tree_condition(pid, after, forest, added, target):
                before = remove_statement(after, added)
                return Scenario.pair(before, after, added=added, target=target)
        return None

    return build


_CONSTRUCTIONS: dict[PropertyId, Callable[[_Builder], Scenario | None]] = {
    PropertyId.DIRECTIONALITY: _directionality,
    PropertyId.REWRITING: _rewriting,
    PropertyId.PROVABILITY: _provability(PropertyId.PROVABILITY),
    PropertyId.WEAK_PROVABILITY: _provability(PropertyId.WEAK_PROVABILITY),
    PropertyId.STABILITY: _stability,
    PropertyId.NEUTRALITY: _addition(PropertyId.NEUTRALITY),
    PropertyId.ATTACKED_PREMISE: _addition(PropertyId.ATTACKED_PREMISE),
    PropertyId.SUPPORTED_PREMISE: _addition(PropertyId.SUPPORTED_PREMISE),
    PropertyId.WEAKENED_PREMISE: _changed_neighbour(PropertyId.WEAKENED_PREMISE),
    PropertyId.STRENGTHENED_PREMISE: _changed_neighbour(PropertyId.STRENGTHENED_PREMISE),
    PropertyId.BOTTOM_STRENGTH_PREMISE: _bottom_strength,
    PropertyId.TOP_STRENGTH_PREMISES: _top_strength,
    PropertyId.MIRRORING: _mirroring,
    PropertyId.ATTACK_REINFORCEMENT: _reinforcement(PropertyId.ATTACK_REINFORCEMENT),
    PropertyId.SUPPORT_REINFORCEMENT: _reinforcement(PropertyId.SUPPORT_REINFORCEMENT),
    PropertyId.ATTACK_MONOTONICITY: _monotonicity(PropertyId.ATTACK_MONOTONICITY),
    PropertyId.SUPPORT_MONOTONICITY: _monotonicity(PropertyId.SUPPORT_MONOTONICITY),
}


def random_scenario(pid: PropertyId, config: FuzzConfig, seed: int) -> Scenario:
    """生成满足性质结构前件的随机场景。

    Args:
        pid: 性质
        config: 生成界限
        seed: 随机种子，相同种子生成相同场景

    Returns:
        Scenario: 通过结构校验的场景

    Raises:
        ScenarioGenerationError: 在 ``config.max_attempts`` 次尝试内未能生成
    """
    builder = _Builder(random.Random(seed), config)
    construct = _CONSTRUCTIONS[pid]
    for _ in range(config.max_attempts):
        try:
            scenario = construct(builder)
            if scenario is None:
                continue
            validate_scenario(pid, scenario)
        except (GraphStructureError, MalformedScenarioError, CSTLimitExceededError) as e:
            logger.debug(f"{pid.value} 场景尝试被丢弃: {e}")
            continue
        return scenario
    raise ScenarioGenerationError(
        f"{pid.value}: {config.max_attempts} 次尝试内未能生成场景",
        {"property": pid.value, "seed": seed},
    )
