"""Pyfiltrations."""

from . import datasets, io, lab, montecarlo, projections, space, utils
from ._version import __version__  # noqa: F401
from .utils._logs import add_file_handler, set_log_level

__all__ = (
    "datasets",
    "io",
    "lab",
    "montecarlo",
    "projections",
    "space",
    "utils",
    "add_file_handler",
    "set_log_level",
)
