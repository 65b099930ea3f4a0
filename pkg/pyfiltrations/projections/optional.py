"""Optional and dual optional projections of raw processes."""

import numpy as np

from .._typing import Process
from ..space.expectation import _check_process, _optional_projection
from ..space.filtration import Filtration
from ..space.process import _check_nondecreasing, increments, lag
from ..utils._docs import fill_doc


@fill_doc
def optional_projection(V, F: Filtration) -> Process:
    """Optional projection of a raw process.

    Parameters
    ----------
    %(process)s
    %(filtration)s

    Returns
    -------
    oV : array of shape (T + 1, n)
        Adapted process ``(oV)_t = E[V_t | F_t]``.
    """
    V = _check_process(V, F, "V")
    return _optional_projection(V, F)


@fill_doc
def dual_optional_projection(V, F: Filtration) -> Process:
    """Dual optional projection of a raw increasing process.

    Parameters
    ----------
    %(increasing_process)s
    %(filtration)s

    Returns
    -------
    Vo : array of shape (T + 1, n)
        Adapted nondecreasing process crediting each increment of ``V`` to the
        information available when it occurs: ``Vo_t = sum_{s <= t} E[dV_s | F_s]``
        with ``dV_0 = V_0``.
    """
    V = _check_process(V, F, "V")
    _check_nondecreasing(V)
    return _dual_optional_projection(V, F)


def _dual_optional_projection(V: Process, F: Filtration) -> Process:
    projected = _optional_projection(increments(V), F)
    return np.cumsum(projected, axis=0)


def _lagged_optional_projection(V: Process, F: Filtration) -> Process:
    """Optional projection of the lagged process, ``E[V_{t-1} | F_t]``."""
    return _optional_projection(lag(V), F)


@fill_doc
def projection_martingale(V, F: Filtration) -> Process:
    """Difference between the optional and dual optional projections.

    Parameters
    ----------
    %(increasing_process)s
    %(filtration)s

    Returns
    -------
    N : array of shape (T + 1, n)
        Martingale ``N = oV - Vo`` with ``N_0 = 0``. It also satisfies
        ``N_t = E[V_{t-1} | F_t] - Vo_{t-1}``.
    """
    V = _check_process(V, F, "V")
    _check_nondecreasing(V)
    return _optional_projection(V, F) - _dual_optional_projection(V, F)


def _predictable_defect(X: Process, F: Filtration):
    """First (t, outcome, value, reference) where X_t is not F_{t-1}-measurable."""
    for t in range(1, F.horizon + 1):
        for block in F[t - 1]:
            for k in block[1:]:
                if X[t, k] != X[t, block[0]]:
                    return t, k, X[t, k], X[t, block[0]]
    return None
