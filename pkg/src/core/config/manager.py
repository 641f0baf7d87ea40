"""
按优先级串联多个配置来源。
"""

from typing import Any, List, Optional, Sequence

from src.core.config.sources import ConfigurationSource, convert_value


class ConfigurationManager:
    """
    Looks a key up in each source in turn; the first source holding a
    non-null value wins. Sources are given highest precedence first.
    """

    def __init__(self, sources: Optional[Sequence[ConfigurationSource]] = None):
        self.sources: List[ConfigurationSource] = list(sources or [])

    def get_value(self, key: str, default: Any = None) -> Any:
        for source in self.sources:
            if not source.has_key(key):
                continue
            value = source.get_value(key)
            if value is not None:
                return value
        return default

    def get_typed_value(self, key: str, default: Any = None, value_type: str = "string") -> Any:
        value = self.get_value(key)
        # 未配置时直接返回默认值，不做类型转换
        if value is None:
            return default
        return convert_value(value, default, value_type)

    def has_key(self, key: str) -> bool:
        return any(source.has_key(key) for source in self.sources)
