"""性质元数据：标签、适用范围、场景类型与角色。"""

from dataclasses import dataclass

from gradualsemantics.models.properties import PropertyFamily, PropertyId, ScenarioKind
from gradualsemantics.registry import NamedSemantics
from gradualsemantics.utils.exceptions import UnknownPropertyError


@dataclass(frozen=True)
class PropertyInfo:
    """单个性质的静态描述。

    Attributes:
        pid: 性质
        label: 矩阵表头
        family: 适用范围
        kind: 场景类型
        roles: 场景 focus 中必须绑定的角色
        clause: 结论条款
    """

    pid: PropertyId
    label: str
    family: PropertyFamily
    kind: ScenarioKind
    roles: tuple[str, ...]
    clause: str


_S = ScenarioKind.SINGLE_GRAPH
_P = ScenarioKind.GRAPH_PAIR
_ALL = PropertyFamily.ALL
_STR = PropertyFamily.STRUCTURED

PROPERTIES: dict[PropertyId, PropertyInfo] = {
    info.pid: info
    for info in (
        PropertyInfo(
            PropertyId.DIRECTIONALITY, "Directionality", _ALL, _P, ("added", "target"),
            "σ′(target) = σ(target)",
        ),
        PropertyInfo(
            PropertyId.REWRITING, "Rewriting", _STR, _S, ("long", "bridge", "short"),
            "σ(long) = σ(short)",
        ),
        PropertyInfo(
            PropertyId.PROVABILITY, "Provability", _STR, _S, ("target",), "σ(target) = 0"
        ),
        PropertyInfo(
            PropertyId.WEAK_PROVABILITY, "WeakProvability", _STR, _S, ("target",),
            "σ(target) = 0",
        ),
        PropertyInfo(
            PropertyId.STABILITY, "Stability", _ALL, _S, ("target",), "σ(target) = τ(target)"
        ),
        PropertyInfo(
            PropertyId.NEUTRALITY, "Neutrality", _ALL, _P, ("added", "target"),
            "σ′(target) = σ(target)",
        ),
        PropertyInfo(
            PropertyId.ATTACKED_PREMISE, "AttackedPremise", _ALL, _P, ("added", "target"),
            "σ′(target) ≤ σ(target)",
        ),
        PropertyInfo(
            PropertyId.SUPPORTED_PREMISE, "SupportedPremise", _ALL, _P, ("added", "target"),
            "σ′(target) ≥ σ(target)",
        ),
        PropertyInfo(
            PropertyId.WEAKENED_PREMISE, "WeakenedPremise", _ALL, _P, ("target", "changed"),
            "σ′(target) ≤ σ(target)",
        ),
        PropertyInfo(
            PropertyId.STRENGTHENED_PREMISE, "StrengthenedPremise", _ALL, _P,
            ("target", "changed"), "σ′(target) ≥ σ(target)",
        ),
        PropertyInfo(
            PropertyId.BOTTOM_STRENGTH_PREMISE, "BottomStrengthPremise", _STR, _S, ("target",),
            "σ(target) = 0",
        ),
        PropertyInfo(
            PropertyId.TOP_STRENGTH_PREMISES, "TopStrengthPremises", _STR, _S, ("target",),
            "σ(target) = 1",
        ),
        PropertyInfo(
            PropertyId.MIRRORING, "Mirroring", _STR, _S, ("first", "second"),
            "σ(first) = 1 − σ(second)",
        ),
        PropertyInfo(
            PropertyId.ATTACK_REINFORCEMENT, "AttackReinforcement", _STR, _P,
            ("raised", "target"), "σ′(target) ≤ σ(target)",
        ),
        PropertyInfo(
            PropertyId.SUPPORT_REINFORCEMENT, "SupportReinforcement", _STR, _P,
            ("raised", "target"), "σ′(target) ≥ σ(target)",
        ),
        PropertyInfo(
            PropertyId.ATTACK_MONOTONICITY, "AttackMonotonicity", _STR, _P,
            ("added", "target"), "σ′(target) ≤ σ(target)",
        ),
        PropertyInfo(
            PropertyId.SUPPORT_MONOTONICITY, "SupportMonotonicity", _STR, _P,
            ("added", "target"), "σ′(target) ≥ σ(target)",
        ),
    )
}


def get_property(name: str | PropertyId) -> PropertyInfo:
    """按 id 或名称获取性质描述。

    名称不区分大小写，接受 ``weak-provability``、``weak_provability`` 与
    ``WeakProvability`` 等写法。

    Raises:
        UnknownPropertyError: 名称未知
    """
    if isinstance(name, PropertyId):
        return PROPERTIES[name]
    wanted = name.strip().lower().replace("_", "-")
    for info in PROPERTIES.values():
        if wanted in (info.pid.value, info.label.lower()):
            return info
    raise UnknownPropertyError(
        f"未知性质: {name}", {"available": [pid.value for pid in PropertyId]}
    )


def is_applicable(pid: PropertyId, semantics: NamedSemantics) -> bool:
    """结构化性质对抽象语义不适用。"""
    return PROPERTIES[pid].family == PropertyFamily.ALL or semantics.structured
