"""Exact vectors over outcomes and processes indexed by time."""

from fractions import Fraction
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from .._typing import Process, Vector
from ..utils._checks import _check_type


def _as_fraction(value, item_name: str = "value") -> Fraction:
    """Convert a rational-like scalar to a Fraction."""
    if isinstance(value, bool):
        raise TypeError(f"Argument '{item_name}' must be a rational, got a bool.")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as error:
        raise ValueError(
            f"Argument '{item_name}' must be a rational number such as 3 or '1/4'. "
            f"Provided: {value!r}."
        ) from error


def as_vector(x, n: Optional[int] = None, item_name: str = "x") -> Vector:
    """Convert a vector over outcomes to an object array of fractions.

    Parameters
    ----------
    x : array-like of shape (n,)
        Rational-like entries (int, Fraction or ``'p/q'`` strings).
    n : int | None
        Expected number of outcomes. If None, the length is not checked.
    item_name : str
        Name of the argument to show inside the error message.

    Returns
    -------
    x : array of shape (n,)
        Array of dtype object holding fractions.
    """
    _check_type(x, ("array-like",), item_name)
    x = np.asarray(x, dtype=object)
    if x.ndim != 1:
        raise ValueError(
            f"Argument '{item_name}' must be a 1D vector over outcomes. "
            f"Provided array has {x.ndim} dimensions."
        )
    if n is not None and x.size != n:
        raise ValueError(
            f"Argument '{item_name}' must have one entry per outcome ({n}). "
            f"Provided: {x.size} entries."
        )
    return np.array([_as_fraction(v, item_name) for v in x], dtype=object)


def as_process(X, horizon: int, n: int, item_name: str = "X") -> Process:
    """Convert a process to an object array of fractions of shape ``(T + 1, n)``.

    Parameters
    ----------
    X : array-like of shape (T + 1, n)
        Rational-like entries. Row ``t`` is the value of the process at time ``t``.
    horizon : int
        Horizon ``T`` of the filtration the process lives on.
    n : int
        Number of outcomes.
    item_name : str
        Name of the argument to show inside the error message.

    Returns
    -------
    X : array of shape (T + 1, n)
        Array of dtype object holding fractions.
    """
    _check_type(X, ("array-like",), item_name)
    X = np.asarray(X, dtype=object)
    if X.shape != (horizon + 1, n):
        raise ValueError(
            f"Argument '{item_name}' must be of shape (T + 1, n) = "
            f"({horizon + 1}, {n}). Provided shape: {X.shape}."
        )
    out = np.empty(X.shape, dtype=object)
    for t in range(horizon + 1):
        out[t] = [_as_fraction(v, item_name) for v in X[t]]
    return out


def lag(X: Process) -> Process:
    """Process shifted by one step, ``(X_-)_t = X_{t-1}`` with ``X_{-1} = 0``."""
    out = np.empty(X.shape, dtype=object)
    out[0] = Fraction(0)
    out[1:] = X[:-1]
    return out


def increments(X: Process) -> Process:
    """Increments ``X_t - X_{t-1}`` with ``X_{-1} = 0``."""
    return X - lag(X)


def _check_nondecreasing(V: Process, item_name: str = "V") -> None:
    """Raise if some path of the process decreases."""
    for t in range(1, V.shape[0]):
        decrease = np.flatnonzero(V[t] < V[t - 1])
        if decrease.size != 0:
            k = decrease[0]
            raise ValueError(
                f"Argument '{item_name}' must have nondecreasing paths. The path of "
                f"outcome {k} decreases at t={t} from {V[t - 1, k]} to {V[t, k]}."
            )


def indicator(mask: NDArray[bool]) -> Vector:
    """Exact 0/1 vector of a boolean mask."""
    return np.array([Fraction(int(m)) for m in mask], dtype=object)


def format_rational(value) -> str:
    """Format a rational as ``'p/q'``, denominator included even when it is 1."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"
