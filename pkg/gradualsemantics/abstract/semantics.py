"""抽象渐进语义：DF-QuAD 与 QEM。"""

import math
from abc import ABC, abstractmethod
from collections.abc import Sequence


def dfquad_aggregate(scores: Sequence[float]) -> float:
    """迭代概率和 Σ，空序列为 0。"""
    result = 0.0
    for score in scores:
        result = result + score - result * score
    return result


def dfquad_combine(v0: float, va: float, vs: float) -> float:
    """DF-QuAD 的组合函数 c(v0, v−, v+)。"""
    if va >= vs:
        return v0 - v0 * abs(vs - va)
    return v0 + (1.0 - v0) * abs(vs - va)


def qem_influence(v: float) -> float:
    """h(v) = max(v,0)² / (1 + max(v,0)²)。"""
    positive = max(v, 0.0)
    return positive * positive / (1.0 + positive * positive)


def qem_combine(
    v0: float, attacker_scores: Sequence[float], supporter_scores: Sequence[float]
) -> float:
    """QEM 在无环图上的简化形式。

    E = Σ 支持者 − Σ 攻击者，σ = v0 + (1 − v0)·h(E) − v0·h(−E)。
    """
    energy = math.fsum(supporter_scores) - math.fsum(attacker_scores)
    score = v0 + (1.0 - v0) * qem_influence(energy) - v0 * qem_influence(-energy)
    return min(1.0, max(0.0, score))


class AbstractSemantics(ABC):
    """抽象渐进语义基类。

    节点得分只依赖其基础分数与直接攻击者、支持者的得分；调用方按节点 id 排序传入。
    """

    name: str = ""

    @abstractmethod
    def evaluate(
        self,
        base: float,
        attacker_scores: Sequence[float],
        supporter_scores: Sequence[float],
    ) -> float:
        """计算单个节点的得分。

        Args:
            base: 基础分数
            attacker_scores: 攻击者得分
            supporter_scores: 支持者得分

        Returns:
            float: [0, 1] 内的得分
        """
        pass

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class DFQuADSemantics(AbstractSemantics):
    """DF-QuAD 语义。"""

    name = "dfquad"

    def evaluate(
        self,
        base: float,
        attacker_scores: Sequence[float],
        supporter_scores: Sequence[float],
    ) -> float:
        return dfquad_combine(
            base, dfquad_aggregate(attacker_scores), dfquad_aggregate(supporter_scores)
        )


class QEMSemantics(AbstractSemantics):
    """二次能量模型（QEM）语义。"""

    name = "qem"

    def evaluate(
        self,
        base: float,
        attacker_scores: Sequence[float],
        supporter_scores: Sequence[float],
    ) -> float:
        return qem_combine(base, attacker_scores, supporter_scores)


DFQUAD = DFQuADSemantics()
QEM = QEMSemantics()


def get_abstract_semantics(name: str) -> AbstractSemantics:
    """按名称获取抽象语义。

    Raises:
        ValueError: 名称未知
    """
    registry: dict[str, AbstractSemantics] = {DFQUAD.name: DFQUAD, QEM.name: QEM}
    semantics = registry.get(name)
    if semantics is None:
        raise ValueError(f"不支持的抽象语义: {name}")
    return semantics
