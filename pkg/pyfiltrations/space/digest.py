"""Canonical payload and digest of a problem instance."""

import hashlib
import json
from typing import Mapping, Optional

from .filtration import Filtration
from .process import format_rational
from .space import SampleSpace
from .times import INF, RandomTime


def canonical_payload(
    space: SampleSpace,
    filtrations: Mapping[str, Filtration],
    times: Optional[Mapping[str, RandomTime]] = None,
    processes: Optional[Mapping] = None,
) -> dict:
    """JSON-serializable description of an instance.

    Rationals are written ``'p/q'``, infinite time values ``'inf'``, partitions as
    lists of 0-based outcome lists in canonical block order.
    """
    horizons = {F.horizon for F in filtrations.values()}
    if len(horizons) != 1:
        raise ValueError("All filtrations of an instance must share the same horizon.")
    payload = {
        "omega": space.n,
        "probs": [format_rational(p) for p in space.probs],
        "horizon": horizons.pop(),
        "filtrations": {
            name: [[list(block) for block in part] for part in F]
            for name, F in filtrations.items()
        },
        "times": {
            name: ["inf" if v == INF else int(v) for v in tau]
            for name, tau in (times or dict()).items()
        },
    }
    if processes:
        payload["processes"] = {
            name: [[format_rational(v) for v in row] for row in X]
            for name, X in processes.items()
        }
    return payload


def instance_digest(
    space: SampleSpace,
    filtrations: Mapping[str, Filtration],
    times: Optional[Mapping[str, RandomTime]] = None,
    processes: Optional[Mapping] = None,
) -> str:
    """SHA-256 hex digest of the canonical payload of an instance."""
    payload = canonical_payload(space, filtrations, times, processes)
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
