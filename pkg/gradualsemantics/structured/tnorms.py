"""De Morgan 三元组：T 范数、T 余范数与否定。"""

import itertools
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

BinaryOp = Callable[[float, float], float]
UnaryOp = Callable[[float], float]

DEFAULT_SAMPLES: tuple[float, ...] = (0.0, 0.1, 0.25, 0.3, 0.5, 0.7, 0.75, 0.9, 1.0)


def product_tnorm(a: float, b: float) -> float:
    return a * b


def probabilistic_sum(a: float, b: float) -> float:
    return a + b - a * b


def standard_negation(a: float) -> float:
    return 1.0 - a


@dataclass(frozen=True)
class DeMorganTriple:
    """(⊗, ⊕, ¬) 三元组，参数化 T 范数语义。"""

    name: str
    tnorm: BinaryOp
    tconorm: BinaryOp
    negation: UnaryOp

    def conjoin(self, values: Iterable[float]) -> float:
        """按给定顺序折叠 ⊗，空序列为 1。"""
        result = 1.0
        for value in values:
            result = self.tnorm(result, value)
        return result

    def disjoin(self, values: Iterable[float]) -> float:
        """按给定顺序折叠 ⊕，空序列为 0。"""
        result = 0.0
        for value in values:
            result = self.tconorm(result, value)
        return result

    def violations(
        self, samples: Sequence[float] = DEFAULT_SAMPLES, tolerance: float = 1e-12
    ) -> list[str]:
        """在采样点上检查 De Morgan 律、交换律、结合律与否定的对合性。

        Returns:
            违反项的描述列表，为空表示通过
        """
        problems: list[str] = []
        t, s, n = self.tnorm, self.tconorm, self.negation
        for a in samples:
            if abs(n(n(a)) - a) > tolerance:
                problems.append(f"¬¬{a} ≠ {a}")
            if abs(t(a, 1.0) - a) > tolerance:
                problems.append(f"{a} ⊗ 1 ≠ {a}")
            if abs(s(a, 0.0) - a) > tolerance:
                problems.append(f"{a} ⊕ 0 ≠ {a}")
        for a, b in itertools.product(samples, repeat=2):
            if abs(t(a, b) - n(s(n(a), n(b)))) > tolerance:
                problems.append(f"De Morgan: {a} ⊗ {b}")
            if abs(s(a, b) - n(t(n(a), n(b)))) > tolerance:
                problems.append(f"De Morgan: {a} ⊕ {b}")
            if abs(t(a, b) - t(b, a)) > tolerance or abs(s(a, b) - s(b, a)) > tolerance:
                problems.append(f"交换律: ({a}, {b})")
        for a, b, c in itertools.product(samples, repeat=3):
            if abs(t(t(a, b), c) - t(a, t(b, c))) > tolerance:
                problems.append(f"⊗ 结合律: ({a}, {b}, {c})")
            if abs(s(s(a, b), c) - s(a, s(b, c))) > tolerance:
                problems.append(f"⊕ 结合律: ({a}, {b}, {c})")
        return problems

    def is_valid(self, samples: Sequence[float] = DEFAULT_SAMPLES) -> bool:
        return not self.violations(samples)


TNORM_P = DeMorganTriple(
    name="tnorm-p",
    tnorm=product_tnorm,
    tconorm=probabilistic_sum,
    negation=standard_negation,
)

TNORM_M = DeMorganTriple(
    name="tnorm-m",
    tnorm=min,
    tconorm=max,
    negation=standard_negation,
)


def builtin_triples() -> dict[str, DeMorganTriple]:
    """内置的乘积三元组与最小值三元组。"""
    return {TNORM_P.name: TNORM_P, TNORM_M.name: TNORM_M}
