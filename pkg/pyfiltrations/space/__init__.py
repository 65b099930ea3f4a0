"""Finite filtered probability spaces."""

from .digest import canonical_payload, instance_digest
from .expectation import basis_martingales, cond_expect, is_adapted, is_martingale
from .filtration import FilteredPair, Filtration
from .partition import Partition, refines
from .process import as_process, as_vector, format_rational
from .space import SampleSpace
from .stopping import is_honest, is_stopping_time, progressive_enlargement
from .times import INF, RandomTime

__all__ = (
    "canonical_payload",
    "instance_digest",
    "basis_martingales",
    "cond_expect",
    "is_adapted",
    "is_martingale",
    "FilteredPair",
    "Filtration",
    "Partition",
    "refines",
    "as_process",
    "as_vector",
    "format_rational",
    "SampleSpace",
    "is_honest",
    "is_stopping_time",
    "progressive_enlargement",
    "INF",
    "RandomTime",
)
