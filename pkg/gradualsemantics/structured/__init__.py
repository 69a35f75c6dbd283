"""结构化语义模块：完全支持树与 T 范数语义。"""

from gradualsemantics.structured.support_trees import (
    all_csts,
    brute_force_csts,
    classify_completeness,
    cst_attacks,
    enumerate_csts,
)
from gradualsemantics.structured.tnorm_semantics import eval_tnorm
from gradualsemantics.structured.tnorms import (
    TNORM_M,
    TNORM_P,
    DeMorganTriple,
    builtin_triples,
)

__all__ = [
    "enumerate_csts",
    "all_csts",
    "brute_force_csts",
    "cst_attacks",
    "classify_completeness",
    "eval_tnorm",
    "DeMorganTriple",
    "TNORM_P",
    "TNORM_M",
    "builtin_triples",
]
