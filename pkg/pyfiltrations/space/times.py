"""Random times with values in ``{0, ..., T, inf}``."""

import math
from typing import Sequence, Tuple, Union

import numpy as np
from numpy.typing import NDArray

from ..utils._checks import _check_type, _ensure_int

INF = math.inf


def _as_time_value(value) -> Union[int, float]:
    """Convert an entry to a nonnegative int or INF."""
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "infinity", "∞"):
            return INF
        raise ValueError(
            f"Random time values must be nonnegative integers or 'inf'. Provided: "
            f"{value!r}."
        )
    if isinstance(value, float) and math.isinf(value) and 0 < value:
        return INF
    value = _ensure_int(value, "value")
    if value < 0:
        raise ValueError(
            f"Random time values must be nonnegative integers or 'inf'. Provided: "
            f"{value}."
        )
    return value


class RandomTime:
    """Map from outcomes to ``{0, ..., T} ∪ {inf}``.

    A random time is an arbitrary map; whether it is a stopping time, an honest time
    or a pseudo-stopping time depends on the filtration it is confronted with.

    Parameters
    ----------
    values : array-like of shape (n,)
        Value of the time on each outcome: nonnegative integers, or ``math.inf`` /
        ``'inf'`` for infinity.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Sequence):
        _check_type(values, ("array-like",), "values")
        if len(values) == 0:
            raise ValueError("Argument 'values' must contain at least one outcome.")
        self._values = tuple(_as_time_value(v) for v in values)

    @classmethod
    def constant(cls, value, n: int) -> "RandomTime":
        """Deterministic time equal to ``value`` on every outcome."""
        return cls([value] * _ensure_int(n, "n"))

    def __repr__(self) -> str:
        values = ", ".join("inf" if v == INF else str(v) for v in self._values)
        return f"<RandomTime | ({values})>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, RandomTime):
            return NotImplemented
        return self._values == other._values

    def __hash__(self) -> int:
        return hash(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self):
        return iter(self._values)

    def __getitem__(self, k: int) -> Union[int, float]:
        return self._values[k]

    def _check_horizon(self, horizon: int, n: int, item_name: str = "tau") -> None:
        """Raise if the time does not fit a filtration of horizon T on n outcomes."""
        if len(self) != n:
            raise ValueError(
                f"Argument '{item_name}' must have one value per outcome ({n}). "
                f"Provided: {len(self)} values."
            )
        for k, v in enumerate(self._values):
            if v != INF and horizon < v:
                raise ValueError(
                    f"Argument '{item_name}' takes the value {v} on outcome {k}, "
                    f"beyond the horizon T={horizon}."
                )

    def codes(self, horizon: int) -> NDArray[int]:
        """Integer encoding of the values, with infinity encoded as ``T + 1``."""
        return np.array(
            [horizon + 1 if v == INF else v for v in self._values], dtype=np.intp
        )

    def eq(self, t: int) -> NDArray[bool]:
        """Mask of the event ``{tau = t}``."""
        return np.array([v == t for v in self._values], dtype=bool)

    def le(self, t: int) -> NDArray[bool]:
        """Mask of the event ``{tau <= t}``."""
        return np.array([v <= t for v in self._values], dtype=bool)

    def minimum(self, t: int) -> Tuple[int, ...]:
        """Values of ``tau ∧ t``."""
        return tuple(min(v, t) for v in self._values)

    @property
    def values(self) -> Tuple[Union[int, float], ...]:
        """Value of the time on each outcome.

        :type: `tuple`
        """
        return self._values

    @property
    def finite(self) -> NDArray[bool]:
        """Mask of the event ``{tau < inf}``.

        :type: `~numpy.array` of shape ``(n,)``
        """
        return np.array([v != INF for v in self._values], dtype=bool)
