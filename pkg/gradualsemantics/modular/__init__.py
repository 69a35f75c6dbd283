"""模块化结构语义模块：前提图、前提聚合与 DC 语义。"""

from gradualsemantics.modular.aggregators import (
    PRODUCT,
    MinimumAggregator,
    PremiseAggregator,
    ProbabilisticSumAggregator,
    ProductAggregator,
    get_aggregator,
)
from gradualsemantics.modular.evaluator import (
    collapse_gap,
    eval_dc,
    eval_modular,
    literal_scores,
    weight_rule,
)
from gradualsemantics.modular.premise_graph import build_premise_graph, nth_root

__all__ = [
    "PremiseAggregator",
    "ProductAggregator",
    "MinimumAggregator",
    "ProbabilisticSumAggregator",
    "PRODUCT",
    "get_aggregator",
    "build_premise_graph",
    "nth_root",
    "eval_modular",
    "eval_dc",
    "weight_rule",
    "collapse_gap",
    "literal_scores",
]
