"""前提聚合函数 ⊙。"""

import math
from abc import ABC, abstractmethod
from collections.abc import Sequence

from gradualsemantics.config.settings import get_settings
from gradualsemantics.utils.exceptions import UnknownAggregatorError


class PremiseAggregator(ABC):
    """把前提文字得分聚合为陈述强度；与顺序无关，全 1 映射为 1。"""

    name: str = ""
    experimental: bool = False

    @abstractmethod
    def fold(self, scores: Sequence[float]) -> float:
        """聚合文字得分。"""
        pass


class ProductAggregator(PremiseAggregator):
    """合取：文字得分之积。"""

    name = "product"

    def fold(self, scores: Sequence[float]) -> float:
        # 排序后相乘，结果与输入顺序无关
        return math.prod(sorted(scores))


class MinimumAggregator(PremiseAggregator):
    """Gödel 合取：文字得分的最小值。"""

    name = "minimum"

    def fold(self, scores: Sequence[float]) -> float:
        return min(scores, default=1.0)


class ProbabilisticSumAggregator(PremiseAggregator):
    """析取草案：文字得分的概率和（实验性）。"""

    name = "probabilistic-sum"
    experimental = True

    def fold(self, scores: Sequence[float]) -> float:
        result = 0.0
        for score in sorted(scores):
            result = result + score - result * score
        return result


PRODUCT = ProductAggregator()

_AGGREGATORS: dict[str, PremiseAggregator] = {
    PRODUCT.name: PRODUCT,
    MinimumAggregator.name: MinimumAggregator(),
    ProbabilisticSumAggregator.name: ProbabilisticSumAggregator(),
}


def get_aggregator(name: str, allow_experimental: bool | None = None) -> PremiseAggregator:
    """按名称获取前提聚合函数。

    Args:
        name: 聚合函数名称
        allow_experimental: 是否允许实验性聚合函数，默认取配置
            ``enable_experimental_aggregators``

    Raises:
        UnknownAggregatorError: 名称未知，或实验性聚合函数未启用
    """
    aggregator = _AGGREGATORS.get(name)
    if aggregator is None:
        raise UnknownAggregatorError(
            f"未知的前提聚合函数: {name}", {"available": sorted(_AGGREGATORS)}
        )
    if allow_experimental is None:
        allow_experimental = get_settings().enable_experimental_aggregators
    if aggregator.experimental and not allow_experimental:
        raise UnknownAggregatorError(f"聚合函数 {name} 为实验性功能，未启用")
    return aggregator
