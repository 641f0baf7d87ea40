"""
Singleton instance of the configuration manager.
"""

import os

from dotenv import load_dotenv

from src.core.config.manager import ConfigurationManager
from src.core.config.sources import EnvironmentConfigSource, YamlConfigSource

ENV_PREFIX = "GALREP_"

# Determine the path to the config files
base_dir = os.path.dirname(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))
app_config_path = os.path.join(base_dir, 'config', 'app.yml')

# .env 中的变量不覆盖已经存在的环境变量
load_dotenv(os.path.join(base_dir, '.env'), override=False)

env_source = EnvironmentConfigSource(prefix=ENV_PREFIX)
# 只在导入时解析一次；运行期覆盖走 GALREP_ 环境变量
yaml_source = YamlConfigSource(app_config_path)

# Environment variables override the YAML config
config_manager = ConfigurationManager([
    env_source,
    yaml_source,
])


def get_config_manager() -> ConfigurationManager:
    """Get the singleton configuration manager instance."""
    return config_manager


def get_base_dir() -> str:
    """Repository root; relative paths in app.yml are resolved against it."""
    return base_dir
