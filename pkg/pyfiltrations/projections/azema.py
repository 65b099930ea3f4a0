"""Azéma supermartingales of a random time."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .._typing import Process
from ..space.expectation import _optional_projection
from ..space.filtration import Filtration
from ..space.process import lag
from ..space.stopping import _check_time
from ..space.times import RandomTime
from ..utils._docs import fill_doc
from .optional import _dual_optional_projection


@dataclass(frozen=True, eq=False)
class AzemaBundle:
    """Processes associated with a random time and a filtration.

    Parameters
    ----------
    A : array of shape (T + 1, n)
        Raw increasing process ``A_t = 1{tau <= t}``.
    oA : array of shape (T + 1, n)
        Optional projection of ``A``.
    Ao : array of shape (T + 1, n)
        Dual optional projection of ``A``.
    Z : array of shape (T + 1, n)
        Supermartingale ``Z_t = P(tau > t | F_t) = 1 - oA_t``.
    Ztilde : array of shape (T + 1, n)
        Supermartingale ``Ztilde_t = P(tau >= t | F_t)``.
    m : array of shape (T + 1, n)
        Martingale ``m = 1 - N = Z + Ao``.
    N : array of shape (T + 1, n)
        Martingale ``N = oA - Ao``.
    """

    A: Process
    oA: Process
    Ao: Process
    Z: Process
    Ztilde: Process
    m: Process
    N: Process

    def __repr__(self) -> str:
        T, n = self.A.shape
        return f"<AzemaBundle | T = {T - 1} | n = {n}>"


def _raw_increasing(tau: RandomTime, horizon: int) -> Process:
    """Process ``A_t = 1{tau <= t}`` as exact fractions."""
    A = np.empty((horizon + 1, len(tau)), dtype=object)
    for t in range(horizon + 1):
        A[t] = [Fraction(int(v)) for v in tau.le(t)]
    return A


@fill_doc
def azema_bundle(tau: RandomTime, F: Filtration) -> AzemaBundle:
    """Compute the Azéma bundle of a random time.

    Parameters
    ----------
    %(tau)s
    %(filtration)s

    Returns
    -------
    bundle : AzemaBundle
        The processes ``A``, ``oA``, ``Ao``, ``Z``, ``Ztilde``, ``m`` and ``N``. They
        satisfy ``Z = m - Ao`` and ``Ztilde_t = m_t - Ao_{t-1}`` exactly.
    """
    _check_time(tau, F)
    A = _raw_increasing(tau, F.horizon)
    oA = _optional_projection(A, F)
    Ao = _dual_optional_projection(A, F)
    N = oA - Ao
    Z = 1 - oA
    Ztilde = 1 - _optional_projection(lag(A), F)
    return AzemaBundle(A=A, oA=oA, Ao=Ao, Z=Z, Ztilde=Ztilde, m=1 - N, N=N)
