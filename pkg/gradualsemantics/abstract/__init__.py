"""抽象渐进语义模块。"""

from gradualsemantics.abstract.evaluator import (
    apply_abstract_to_sg,
    eval_abstract,
    statement_graph_to_bipolar,
)
from gradualsemantics.abstract.semantics import (
    DFQUAD,
    QEM,
    AbstractSemantics,
    DFQuADSemantics,
    QEMSemantics,
    dfquad_aggregate,
    dfquad_combine,
    get_abstract_semantics,
    qem_combine,
    qem_influence,
)

__all__ = [
    "AbstractSemantics",
    "DFQuADSemantics",
    "QEMSemantics",
    "DFQUAD",
    "QEM",
    "dfquad_aggregate",
    "dfquad_combine",
    "qem_combine",
    "qem_influence",
    "get_abstract_semantics",
    "eval_abstract",
    "apply_abstract_to_sg",
    "statement_graph_to_bipolar",
]
