"""Exact conditional expectations, adaptedness and martingales."""

from fractions import Fraction
from typing import List, Optional

import numpy as np

from .._typing import Process, Vector
from ..utils._checks import _check_type
from ..utils._docs import fill_doc
from .filtration import Filtration
from .partition import Partition
from .process import as_process, as_vector, indicator
from .space import SampleSpace


@fill_doc
def cond_expect(x, part: Partition, space: SampleSpace) -> Vector:
    """Conditional expectation of a vector given the sigma-algebra of a partition.

    Parameters
    ----------
    x : array-like of shape (n,)
        Rational-like vector over outcomes.
    part : Partition
        Partition generating the conditioning sigma-algebra.
    %(space)s

    Returns
    -------
    y : array of shape (n,)
        Exact vector, constant on every block ``B`` of ``part`` and equal to
        ``sum(p * x over B) / p(B)`` there.
    """
    _check_type(part, (Partition,), "part")
    _check_type(space, (SampleSpace,), "space")
    if part.n != space.n:
        raise ValueError(
            f"Argument 'part' is defined on {part.n} outcomes while the sample space "
            f"has {space.n} outcomes."
        )
    x = as_vector(x, space.n)
    return _cond_expect(x, part, space.probs)


def _cond_expect(x: Vector, part: Partition, probs: Vector) -> Vector:
    """Compute the conditional expectation without checking inputs."""
    out = np.empty(x.size, dtype=object)
    for block in part:
        idx = list(block)
        weights = probs[idx]
        value = (weights * x[idx]).sum() / weights.sum()
        for k in idx:
            out[k] = value
    return out


def _check_process(X, F: Filtration, item_name: str = "X") -> Process:
    _check_type(F, (Filtration,), "F")
    return as_process(X, F.horizon, F.n, item_name)


def _first_unmeasurable(X: Process, F: Filtration):
    """First (t, outcome) where X_t is not constant on its block of F[t]."""
    for t, part in enumerate(F):
        for block in part:
            for k in block[1:]:
                if X[t, k] != X[t, block[0]]:
                    return t, k
    return None


@fill_doc
def is_adapted(X, F: Filtration) -> bool:
    """Check if a process is adapted to a filtration.

    Parameters
    ----------
    %(process)s
    %(filtration)s

    Returns
    -------
    adapted : bool
        True if ``X_t`` is constant on every block of ``F[t]``, for every ``t``.
    """
    X = _check_process(X, F)
    return _first_unmeasurable(X, F) is None


@fill_doc
def is_martingale(X, F: Filtration) -> bool:
    """Check if an adapted process is a martingale.

    Parameters
    ----------
    %(process)s
    %(filtration)s

    Returns
    -------
    martingale : bool
        True if ``E[X_t | F_{t-1}] = X_{t-1}`` exactly for every ``1 <= t <= T``.
    """
    X = _check_process(X, F)
    location = _first_unmeasurable(X, F)
    if location is not None:
        t, k = location
        raise ValueError(
            "Argument 'X' must be adapted to 'F'. The value at t=%i is not "
            "constant on the block of outcome %i." % (t, k)
        )
    return _first_martingale_defect(X, F) is None


def _first_martingale_defect(X: Process, F: Filtration):
    """First (t, outcome, E[X_t | F_{t-1}], X_{t-1}) where X is no martingale."""
    probs = F.space.probs
    for t in range(1, F.horizon + 1):
        projected = _cond_expect(X[t], F[t - 1], probs)
        for k in range(F.n):
            if projected[k] != X[t - 1, k]:
                return t, k, projected[k], X[t - 1, k]
    return None


@fill_doc
def basis_martingales(
    F: Filtration, space: Optional[SampleSpace] = None
) -> List[Process]:
    """Closed martingales of the terminal blocks of a filtration.

    Parameters
    ----------
    %(filtration)s
    space : SampleSpace | None
        Sample space of the filtration. If None, ``F.space`` is used.

    Returns
    -------
    martingales : list of array of shape (T + 1, n)
        One martingale ``M^B_t = P(B | F_t)`` per block ``B`` of ``F[T]``, in the
        canonical block order. Every F-martingale is an affine combination of these.
    """
    _check_type(F, (Filtration,), "F")
    if space is not None:
        _check_type(space, (SampleSpace,), "space")
        if space != F.space:
            raise ValueError(
                "Argument 'space' must be the sample space 'F' is defined on."
            )
    probs = F.space.probs
    martingales = []
    for block in F[F.horizon]:
        mask = np.zeros(F.n, dtype=bool)
        mask[list(block)] = True
        terminal = indicator(mask)
        M = np.empty((F.horizon + 1, F.n), dtype=object)
        for t in range(F.horizon + 1):
            M[t] = _cond_expect(terminal, F[t], probs)
        martingales.append(M)
    return martingales


def _optional_projection(V: Process, F: Filtration) -> Process:
    probs = F.space.probs
    out = np.empty(V.shape, dtype=object)
    for t in range(F.horizon + 1):
        out[t] = _cond_expect(V[t], F[t], probs)
    return out


def _zeros(shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out
