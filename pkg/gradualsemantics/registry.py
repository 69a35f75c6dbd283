"""六种内置语义的命名注册表。"""

from collections.abc import Callable
from dataclasses import dataclass

from gradualsemantics.abstract.evaluator import apply_abstract_to_sg
from gradualsemantics.abstract.semantics import DFQUAD, QEM
from gradualsemantics.models.graph import StatementGraph
from gradualsemantics.modular.evaluator import eval_dc
from gradualsemantics.structured.tnorm_semantics import eval_tnorm
from gradualsemantics.structured.tnorms import TNORM_M, TNORM_P
from gradualsemantics.utils.exceptions import UnknownSemanticsError

Evaluator = Callable[[StatementGraph], dict[str, float]]


@dataclass(frozen=True)
class NamedSemantics:
    """带名称的渐进语义。

    Attributes:
        name: CLI 使用的名称
        label: 矩阵表头使用的短标签
        structured: 是否为结构化语义（会检查陈述内部结构）
        evaluator: 陈述图 → 强度映射
    """

    name: str
    label: str
    structured: bool
    evaluator: Evaluator

    def evaluate(self, graph: StatementGraph) -> dict[str, float]:
        return self.evaluator(graph)


SEMANTICS: dict[str, NamedSemantics] = {
    s.name: s
    for s in (
        NamedSemantics("tnorm-p", "Tp", True, lambda g: eval_tnorm(g, TNORM_P)),
        NamedSemantics("tnorm-m", "Tm", True, lambda g: eval_tnorm(g, TNORM_M)),
        NamedSemantics("dc-dfquad", "∧D", True, lambda g: eval_dc(g, DFQUAD)),
        NamedSemantics("dc-qem", "∧Q", True, lambda g: eval_dc(g, QEM)),
        NamedSemantics("dfquad", "D", False, lambda g: apply_abstract_to_sg(g, DFQUAD)),
        NamedSemantics("qem", "Q", False, lambda g: apply_abstract_to_sg(g, QEM)),
    )
}

SEMANTICS_NAMES: tuple[str, ...] = tuple(SEMANTICS)


def get_semantics(name: str) -> NamedSemantics:
    """按名称获取语义。

    Raises:
        UnknownSemanticsError: 名称未知
    """
    semantics = SEMANTICS.get(name)
    if semantics is None:
        raise UnknownSemanticsError(
            f"未知语义: {name}", {"available": list(SEMANTICS_NAMES)}
        )
    return semantics
