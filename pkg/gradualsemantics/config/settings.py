"""配置管理模块。

使用 pydantic-settings 从环境变量或 .env 文件加载配置，环境变量前缀为 ``GRADUAL_``。
"""

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

SEMANTICS_CHOICES = ("tnorm-p", "tnorm-m", "dc-dfquad", "dc-qem", "dfquad", "qem")


class Settings(BaseSettings):
    """应用程序配置。

    从环境变量或 .env 文件加载配置。
    """

    # 求值配置
    default_semantics: str = Field(
        default="dc-dfquad",
        description="CLI 未指定 --semantics 时使用的语义",
    )
    tolerance: float = Field(default=1e-9, description="性质检查中相等判定的容差")
    cst_cap: int = Field(
        default=1_000_000,
        description="完全支持树枚举的数量上限，超过时报错",
    )

    # 随机场景配置
    fuzz_trials: int = Field(default=10_000, description="每个 (语义, 性质) 单元的随机试验次数")
    fuzz_seed: int = Field(default=42, description="随机试验的基础种子")
    fuzz_workers: int = Field(default=1, description="并行执行随机试验的进程数")
    max_statements: int = Field(default=8, description="随机场景中陈述数量的上限")
    max_premise_size: int = Field(default=3, description="随机陈述前提中文字数量的上限")
    atom_pool_size: int = Field(default=6, description="随机场景的原子池大小")
    continuous_weight_share: float = Field(
        default=0.5,
        description="连续均匀采样权重所占比例，其余取自 {0, 0.1, ..., 1} 网格",
    )
    unsupported_premise_share: float = Field(
        default=0.3,
        description="随机场景中前提文字保持无支持的比例",
    )

    # 前提聚合
    enable_experimental_aggregators: bool = Field(
        default=False,
        description="是否启用实验性的析取聚合函数（概率和）",
    )

    # 日志配置
    log_level: str = Field(default="WARNING", description="日志级别")
    log_file: str | None = Field(default=None, description="日志文件路径（可选）")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="GRADUAL_",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("default_semantics")
    @classmethod
    def validate_semantics(cls, v: str) -> str:
        """校验默认语义名称。"""
        if v not in SEMANTICS_CHOICES:
            raise ValueError(f"未知语义 {v}，可选: {', '.join(SEMANTICS_CHOICES)}")
        return v

    @field_validator("tolerance")
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        """容差必须非负。"""
        if v < 0:
            raise ValueError("容差必须为非负数")
        return v

    @field_validator("continuous_weight_share", "unsupported_premise_share")
    @classmethod
    def validate_share(cls, v: float) -> float:
        """比例必须位于 [0,1]。"""
        if not 0.0 <= v <= 1.0:
            raise ValueError("比例必须位于 [0, 1]")
        return v

    @field_validator(
        "cst_cap", "fuzz_trials", "fuzz_workers", "max_statements", "max_premise_size",
        "atom_pool_size",
    )
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """计数类配置必须为正。"""
        if v < 1:
            raise ValueError("必须为正整数")
        return v


# 全局配置实例
_settings: Settings | None = None


def get_settings() -> Settings:
    """获取配置实例。

    使用单例模式，确保只加载一次配置。
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """重置配置实例（主要用于测试）。"""
    global _settings
    _settings = None
