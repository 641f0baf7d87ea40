"""
Configuration module for the application.

This module provides a unified interface for accessing configuration values
from the environment (prefix ``GALREP_``) and ``config/app.yml``.
"""

import os
from typing import Any

from src.core.config.instance import get_config_manager, get_base_dir

# Get the configuration manager
config_manager = get_config_manager()


def get_typed_config(key: str, default: Any = None, value_type: str = "string") -> Any:
    """
    Get a typed configuration value.

    Args:
        key: The configuration key
        default: Default value if the key is not found
        value_type: Type to convert the value to (string, int, float, bool, json, list)

    Returns:
        The typed configuration value or the default
    """
    return config_manager.get_typed_value(key, default, value_type)


def _resolve_path(path: str) -> str:
    if os.path.isabs(path):
        return path
    return os.path.join(get_base_dir(), path)


def get_tables_dir() -> str:
    """判别式下界表所在目录"""
    return _resolve_path(get_typed_config("TABLES_DIR", "config/tables"))


def get_golden_dir() -> str:
    return _resolve_path(get_typed_config("GOLDEN_DIR", "config/golden"))


def get_log_dir() -> str:
    return _resolve_path(get_typed_config("LOG_DIR", "logs"))


def get_log_level() -> str:
    return get_typed_config("LOG_LEVEL", "INFO").upper()


def get_decimal_places() -> int:
    return get_typed_config("EXACT.DECIMAL_PLACES", 3, "int")


def get_exact_max_bits() -> int:
    return get_typed_config("EXACT.MAX_BITS", 127, "int")


def get_exact_max_pow_bits() -> int:
    return get_typed_config("EXACT.MAX_POW_BITS", 4_000_000, "int")


def get_fixpoint_max_iterations() -> int:
    return get_typed_config("FIXPOINT.MAX_ITERATIONS", 20, "int")


def get_max_perm_degree() -> int:
    return get_typed_config("GROUPS.MAX_DEGREE", 16, "int")


def get_max_subgroup_order() -> int:
    return get_typed_config("GROUPS.MAX_SUBGROUP_ORDER", 1000, "int")


def get_default_seed() -> int:
    return get_typed_config("MEATAXE.DEFAULT_SEED", 1, "int")


def get_meataxe_max_attempts() -> int:
    return get_typed_config("MEATAXE.MAX_ATTEMPTS", 400, "int")


def get_meataxe_max_factor_degree() -> int:
    return get_typed_config("MEATAXE.MAX_FACTOR_DEGREE", 12, "int")


def get_meataxe_spot_checks() -> int:
    return get_typed_config("MEATAXE.SPOT_CHECKS", 4, "int")


def get_meataxe_max_dimension() -> int:
    return get_typed_config("MEATAXE.MAX_DIMENSION", 1024, "int")
