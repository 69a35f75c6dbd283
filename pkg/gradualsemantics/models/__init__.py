"""数据模型模块。"""

from gradualsemantics.models.bipolar import BipolarEvalGraph, PremiseGraph, literal_node
from gradualsemantics.models.graph import (
    Completeness,
    CompleteSupportTree,
    PathRelation,
    Relation,
    StatementGraph,
)
from gradualsemantics.models.logic import (
    TOP,
    Literal,
    Premise,
    PremiseKind,
    Statement,
    lit,
    make_statement,
    negate,
)
from gradualsemantics.models.parsing import ParseError, ParseErrorKind, SourceSpan
from gradualsemantics.models.properties import (
    ExpectedStrength,
    FixtureResult,
    FuzzConfig,
    FuzzReport,
    MatrixCell,
    MatrixStatus,
    MetaCheck,
    PropertyFamily,
    PropertyFixture,
    PropertyId,
    PropertyVerdict,
    PropertyWitness,
    SatisfactionMatrix,
    Scenario,
    ScenarioKind,
    Transformation,
    VerdictStatus,
)

__all__ = [
    "TOP",
    "Literal",
    "Premise",
    "PremiseKind",
    "Statement",
    "lit",
    "make_statement",
    "negate",
    "StatementGraph",
    "Completeness",
    "CompleteSupportTree",
    "PathRelation",
    "Relation",
    "BipolarEvalGraph",
    "PremiseGraph",
    "literal_node",
    "ParseError",
    "ParseErrorKind",
    "SourceSpan",
    "PropertyId",
    "PropertyFamily",
    "ScenarioKind",
    "Scenario",
    "Transformation",
    "VerdictStatus",
    "PropertyVerdict",
    "PropertyWitness",
    "ExpectedStrength",
    "PropertyFixture",
    "FixtureResult",
    "FuzzConfig",
    "FuzzReport",
    "MatrixStatus",
    "MatrixCell",
    "MetaCheck",
    "SatisfactionMatrix",
]
