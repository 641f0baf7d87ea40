"""
Configuration system package.
"""

from src.core.config.sources import (
    ConfigurationSource,
    EnvironmentConfigSource,
    YamlConfigSource,
)
from src.core.config.manager import ConfigurationManager

__all__ = [
    'ConfigurationSource',
    'EnvironmentConfigSource',
    'YamlConfigSource',
    'ConfigurationManager',
]
