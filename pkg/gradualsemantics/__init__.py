"""GradualSemantics - 陈述图渐进语义求值与性质实验工具。"""

from gradualsemantics.evaluator import GraphEvaluator
from gradualsemantics.parsing import load_sg, parse_sg
from gradualsemantics.registry import SEMANTICS_NAMES, get_semantics

__version__ = "0.1.0"
__all__ = [
    "GraphEvaluator",
    "load_sg",
    "parse_sg",
    "get_semantics",
    "SEMANTICS_NAMES",
    "__version__",
]
