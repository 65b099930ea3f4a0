"""Utils module for utilities."""

from ._config import get_config, set_config

__all__ = ("get_config", "set_config")
