"""
配置来源：GALREP_ 环境变量与 config/app.yml。

键统一使用点号分隔的层级形式，例如 ``MEATAXE.DEFAULT_SEED``；
环境变量里点号换成下划线，即 ``GALREP_MEATAXE_DEFAULT_SEED``。
"""

import json
import logging
import os
from abc import ABC, abstractmethod
from typing import Any, Callable, Dict

import yaml

logger = logging.getLogger(__name__)

_TRUE_WORDS = ("true", "1", "yes", "on")


def _to_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    return str(value).strip().lower() in _TRUE_WORDS


def _to_json(value: Any) -> Any:
    return value if isinstance(value, (dict, list)) else json.loads(value)


def _to_list(value: Any) -> list:
    if isinstance(value, list):
        return value
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return [value]


_CONVERTERS: Dict[str, Callable[[Any], Any]] = {
    "int": int,
    "float": float,
    "bool": _to_bool,
    "json": _to_json,
    "list": _to_list,
    "string": str,
}


def convert_value(value: Any, default: Any, value_type: str) -> Any:
    """把原始配置值转换为目标类型，缺失或转换失败时返回默认值"""
    if value is None:
        return default
    converter = _CONVERTERS.get(value_type, str)
    try:
        return converter(value)
    except (ValueError, TypeError, json.JSONDecodeError):
        logger.warning(f"config value {value!r} is not a valid {value_type}; using {default!r}")
        return default


class ConfigurationSource(ABC):
    """只读配置来源"""

    @abstractmethod
    def get_value(self, key: str, default: Any = None) -> Any:
        ...

    @abstractmethod
    def has_key(self, key: str) -> bool:
        ...


class EnvironmentConfigSource(ConfigurationSource):
    """Reads ``<prefix><KEY>`` from the process environment, dots mapped to underscores."""

    def __init__(self, prefix: str = "", case_sensitive: bool = False):
        self.prefix = prefix
        self.case_sensitive = case_sensitive

    def env_name(self, key: str) -> str:
        name = f"{self.prefix}{key}".replace(".", "_")
        return name if self.case_sensitive else name.upper()

    def get_value(self, key: str, default: Any = None) -> Any:
        return os.environ.get(self.env_name(key), default)

    def has_key(self, key: str) -> bool:
        return self.env_name(key) in os.environ


def _flatten(data: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    flat: Dict[str, Any] = {}
    for name, value in data.items():
        key = f"{prefix}{name}"
        flat[key] = value
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{key}."))
    return flat


class YamlConfigSource(ConfigurationSource):
    """
    app.yml 配置来源。

    文件在构造时解析一次并展平成点号键。
    文件不存在或解析失败时视为空配置。
    """

    def __init__(self, file_path: str):
        self.file_path = file_path
        self._values: Dict[str, Any] = {}
        self._load()

    def _load(self) -> None:
        if not os.path.exists(self.file_path):
            self._values = {}
            return
        try:
            with open(self.file_path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            logger.warning(f"cannot read {self.file_path}: {e}")
            data = {}
        self._values = _flatten(data) if isinstance(data, dict) else {}

    def get_value(self, key: str, default: Any = None) -> Any:
        value = self._values.get(key)
        return default if value is None else value

    def has_key(self, key: str) -> bool:
        return key in self._values
