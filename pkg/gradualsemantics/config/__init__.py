"""配置管理模块。"""

from gradualsemantics.config.settings import (
    SEMANTICS_CHOICES,
    Settings,
    get_settings,
    reset_settings,
)

__all__ = ["SEMANTICS_CHOICES", "Settings", "get_settings", "reset_settings"]
