"""性质实验的数据模型：性质、场景、判定、夹具、随机试验报告与满足矩阵。"""

from enum import Enum
from typing import Self

from pydantic import BaseModel, Field, model_validator

from gradualsemantics.models.graph import StatementGraph


class PropertyId(str, Enum):
    """渐进语义的形式性质。"""

    DIRECTIONALITY = "directionality"
    REWRITING = "rewriting"
    PROVABILITY = "provability"
    WEAK_PROVABILITY = "weak-provability"
    STABILITY = "stability"
    NEUTRALITY = "neutrality"
    ATTACKED_PREMISE = "attacked-premise"
    SUPPORTED_PREMISE = "supported-premise"
    WEAKENED_PREMISE = "weakened-premise"
    STRENGTHENED_PREMISE = "strengthened-premise"
    BOTTOM_STRENGTH_PREMISE = "bottom-strength-premise"
    TOP_STRENGTH_PREMISES = "top-strength-premises"
    MIRRORING = "mirroring"
    ATTACK_REINFORCEMENT = "attack-reinforcement"
    SUPPORT_REINFORCEMENT = "support-reinforcement"
    ATTACK_MONOTONICITY = "attack-monotonicity"
    SUPPORT_MONOTONICITY = "support-monotonicity"


class PropertyFamily(str, Enum):
    """性质适用范围：所有渐进语义，或仅结构化语义。"""

    ALL = "all"
    STRUCTURED = "structured"


class ScenarioKind(str, Enum):
    """场景类型。"""

    SINGLE_GRAPH = "single-graph"
    GRAPH_PAIR = "graph-pair"


class Transformation(BaseModel):
    """G → G′ 的变换描述。"""

    added: str | None = Field(default=None, description="G′ 中新增的陈述 id")
    changed_weights: dict[str, tuple[float, float]] = Field(
        default_factory=dict, description="权重变化: id → (τ, τ′)"
    )


class Scenario(BaseModel):
    """性质实例：一个或两个陈述图，以及绑定到性质量词变量的焦点陈述。"""

    kind: ScenarioKind = Field(..., description="场景类型")
    graphs: tuple[StatementGraph, ...] = Field(..., description="G，或 (G, G′)")
    focus: dict[str, str] = Field(..., description="角色 → 陈述 id")
    transformation: Transformation | None = Field(default=None, description="变换描述")

    @model_validator(mode="after")
    def validate_graph_count(self) -> Self:
        """单图场景恰有一个图，图对场景恰有两个。"""
        expected = 1 if self.kind == ScenarioKind.SINGLE_GRAPH else 2
        if len(self.graphs) != expected:
            raise ValueError(f"{self.kind.value} 场景需要 {expected} 个图")
        return self

    @classmethod
    def single(cls, graph: StatementGraph, **focus: str) -> "Scenario":
        return cls(kind=ScenarioKind.SINGLE_GRAPH, graphs=(graph,), focus=focus)

    @classmethod
    def pair(
        cls, before: StatementGraph, after: StatementGraph, **focus: str
    ) -> "Scenario":
        added = sorted(set(after.ids) - set(before.ids))
        changed = {
            sid: (before.weights[sid], after.weights[sid])
            for sid in before.ids
            if sid in after and before.weights[sid] != after.weights[sid]
        }
        return cls(
            kind=ScenarioKind.GRAPH_PAIR,
            graphs=(before, after),
            focus=focus,
            transformation=Transformation(
                added=added[0] if len(added) == 1 else None, changed_weights=changed
            ),
        )

    @property
    def before(self) -> StatementGraph:
        return self.graphs[0]

    @property
    def after(self) -> StatementGraph:
        return self.graphs[-1]

    def role(self, name: str) -> str:
        return self.focus[name]

    @property
    def size(self) -> int:
        return max(len(g) for g in self.graphs)


class VerdictStatus(str, Enum):
    """单个性质实例的判定结果。"""

    HOLDS = "holds"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not-applicable"


class PropertyWitness(BaseModel):
    """违反证据：足以重新运行检查。"""

    scenario: Scenario = Field(..., description="场景")
    strengths: list[dict[str, float]] = Field(..., description="每个图的强度映射")
    clause: str = Field(..., description="被违反的性质条款")


class PropertyVerdict(BaseModel):
    """check_property 的结果。"""

    pid: PropertyId = Field(..., description="性质")
    semantics: str = Field(..., description="语义名称")
    status: VerdictStatus = Field(..., description="判定")
    vacuous: bool = Field(default=False, description="前件中依赖语义的部分未被触发")
    detail: str = Field(default="", description="说明")
    witness: PropertyWitness | None = Field(default=None, description="违反证据")

    @model_validator(mode="after")
    def validate_witness(self) -> Self:
        """违反判定必须携带完整证据。"""
        if self.status == VerdictStatus.VIOLATED and self.witness is None:
            raise ValueError("违反判定必须携带证据")
        return self


class ExpectedStrength(BaseModel):
    """夹具中期望的强度值。"""

    graph: int = Field(default=0, ge=0, le=1, description="0 表示 G，1 表示 G′")
    statement: str = Field(..., description="陈述 id")
    value: float = Field(..., description="期望强度")
    tolerance: float = Field(default=1e-9, ge=0, description="容差")


class PropertyFixture(BaseModel):
    """可机器检查的性质夹具。"""

    name: str = Field(..., description="夹具名称")
    pid: PropertyId = Field(..., description="性质")
    semantics: str = Field(..., description="语义名称")
    scenario: Scenario = Field(..., description="场景")
    expected: VerdictStatus = Field(..., description="期望判定")
    strengths: list[ExpectedStrength] = Field(default_factory=list, description="期望强度")
    source: str = Field(..., description="数值出处的引文")
    note: str | None = Field(default=None, description="附注")


class FixtureResult(BaseModel):
    """单个夹具的检查结果。"""

    fixture: str = Field(..., description="夹具名称")
    pid: PropertyId = Field(..., description="性质")
    semantics: str = Field(..., description="语义名称")
    expected: VerdictStatus = Field(..., description="期望判定")
    verdict: PropertyVerdict = Field(..., description="实际判定")
    mismatches: list[str] = Field(default_factory=list, description="强度不符项")

    @property
    def passed(self) -> bool:
        return self.verdict.status == self.expected and not self.mismatches


class FuzzConfig(BaseModel):
    """随机场景生成的界限。"""

    max_statements: int = Field(default=8, ge=2, description="陈述数量上限")
    max_premise_size: int = Field(default=3, ge=1, description="前提文字数量上限")
    atom_pool_size: int = Field(default=6, ge=2, description="原子池大小")
    continuous_weight_share: float = Field(default=0.5, ge=0, le=1, description="连续权重比例")
    unsupported_premise_share: float = Field(
        default=0.3, ge=0, le=1, description="无支持前提文字比例"
    )
    max_attempts: int = Field(default=200, ge=1, description="单个场景的最大尝试次数")

    @classmethod
    def from_settings(cls) -> "FuzzConfig":
        """由全局配置构造。"""
        from gradualsemantics.config.settings import get_settings

        settings = get_settings()
        return cls(
            max_statements=settings.max_statements,
            max_premise_size=settings.max_premise_size,
            atom_pool_size=settings.atom_pool_size,
            continuous_weight_share=settings.continuous_weight_share,
            unsupported_premise_share=settings.unsupported_premise_share,
        )


class FuzzReport(BaseModel):
    """随机试验报告。"""

    pid: PropertyId = Field(..., description="性质")
    semantics: str = Field(..., description="语义名称")
    seed: int = Field(..., description="基础种子")
    trials: int = Field(default=0, description="已运行试验数")
    triggered: int = Field(default=0, description="前件被完整触发的试验数")
    violations: int = Field(default=0, description="违反次数")
    skipped: int = Field(default=0, description="未能生成场景的试验数")
    not_applicable: bool = Field(default=False, description="语义与性质不兼容")
    first_witness: PropertyWitness | None = Field(default=None, description="首个（已最小化的）证据")
    elapsed_seconds: float = Field(default=0.0, description="耗时（秒）")

    @property
    def vacuous(self) -> int:
        return self.trials - self.triggered


class MatrixStatus(str, Enum):
    """满足矩阵单元状态。"""

    NOT_APPLICABLE = "not-applicable"
    VIOLATED_BY_FIXTURE = "violated-by-fixture"
    VIOLATED_BY_FUZZ = "violated-by-fuzz"
    NO_COUNTEREXAMPLE = "no-counterexample-found"

    @property
    def symbol(self) -> str:
        if self == MatrixStatus.NOT_APPLICABLE:
            return "−"
        if self == MatrixStatus.NO_COUNTEREXAMPLE:
            return "✓"
        return "×"


class MatrixCell(BaseModel):
    """矩阵单元。"""

    semantics: str = Field(..., description="语义名称")
    pid: PropertyId = Field(..., description="性质")
    status: MatrixStatus = Field(..., description="状态")
    evidence: str | None = Field(default=None, description="证据指针：夹具名或随机试验种子")
    trials: int = Field(default=0, description="随机试验次数")


class MetaCheck(BaseModel):
    """矩阵层面的元检查结果。"""

    name: str = Field(..., description="检查名称")
    passed: bool = Field(..., description="是否通过")
    detail: str = Field(default="", description="说明")


class SatisfactionMatrix(BaseModel):
    """语义 × 性质的满足矩阵。"""

    semantics: list[str] = Field(default_factory=list, description="行：语义名称")
    properties: list[PropertyId] = Field(default_factory=list, description="列：性质")
    cells: list[MatrixCell] = Field(default_factory=list, description="单元")
    meta_checks: list[MetaCheck] = Field(default_factory=list, description="元检查")

    def cell(self, semantics: str, pid: PropertyId) -> MatrixCell:
        for cell in self.cells:
            if cell.semantics == semantics and cell.pid == pid:
                return cell
        raise KeyError((semantics, pid))
