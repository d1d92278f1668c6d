"""Configuration loading."""

from .loader import BUILTIN_DEFAULTS, ConfigurationError, Defaults, get_setting, load_config, load_defaults

__all__ = ["BUILTIN_DEFAULTS", "ConfigurationError", "Defaults", "get_setting", "load_config", "load_defaults"]
