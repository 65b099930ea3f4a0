"""Pseudo-stopping times and the five-way characterization."""

from fractions import Fraction
from typing import Optional, Tuple, Union

import numpy as np

from .._report import CheckReport, Witness
from .._typing import Process
from ..projections.azema import azema_bundle
from ..projections.optional import _predictable_defect
from ..space.digest import instance_digest
from ..space.expectation import (
    _cond_expect,
    _first_martingale_defect,
    basis_martingales,
)
from ..space.filtration import Filtration
from ..space.process import indicator
from ..space.stopping import _check_time, progressive_enlargement
from ..space.times import INF, RandomTime
from ..utils._docs import fill_doc
from ..utils._logs import logger, verbose

_LABELS = (
    "pseudo-stopping",
    "ao-terminal",
    "m-one",
    "stopped-martingales",
    "ztilde-predictable",
)


def _stopped_value(M: Process, tau: RandomTime) -> np.ndarray:
    """Vector ``M_tau`` with ``M_inf = M_T``."""
    T = M.shape[0] - 1
    return np.array(
        [M[T if v == INF else v, k] for k, v in enumerate(tau)], dtype=object
    )


def _stopped_process(M: Process, tau: RandomTime) -> Process:
    """Process ``M_{t ∧ tau}``."""
    out = np.empty(M.shape, dtype=object)
    for t in range(M.shape[0]):
        out[t] = [M[min(t, v), k] for k, v in enumerate(tau)]
    return out


def _pseudo_defect(tau: RandomTime, F: Filtration) -> Optional[Witness]:
    """Witness of the first basis martingale with ``E[M_tau] != E[M_0]``."""
    space = F.space
    for block, M in zip(F[F.horizon], basis_martingales(F)):
        value = space.expectation(_stopped_value(M, tau))
        target = space.prob(block)
        if value != target:
            return Witness(
                condition="pseudo-stopping",
                values=(value, target),
                block=block,
                tau=tau.values,
            )
    return None


@fill_doc
def is_pseudo_stopping(
    tau: RandomTime, F: Filtration, *, return_witness: bool = False
) -> Union[bool, Tuple[bool, Optional[Witness]]]:
    """Check if a random time is a pseudo-stopping time.

    Parameters
    ----------
    %(tau)s
    %(filtration)s
    return_witness : bool
        If True, the counterexample is returned along the verdict.

    Returns
    -------
    pseudo : bool
        True if ``E[M_tau] = E[M_0]`` for every basis martingale of ``F``, with
        ``M_inf = M_T``. Every F-martingale is an affine combination of the basis
        martingales, so this decides the property for the whole class.
    witness : Witness | None
        First failing basis block with ``(E[M_tau], E[M_0])``. Only returned if
        ``return_witness=True``.
    """
    _check_time(tau, F)
    witness = _pseudo_defect(tau, F)
    if return_witness:
        return witness is None, witness
    return witness is None


def _first_mismatch(X, Y, condition: str, tau: RandomTime) -> Optional[Witness]:
    for t in range(X.shape[0]):
        for k in range(X.shape[1]):
            if X[t, k] != Y[t, k]:
                return Witness(
                    condition=condition,
                    t=t,
                    outcome=k,
                    values=(X[t, k], Y[t, k]),
                    tau=tau.values,
                )
    return None


@fill_doc
@verbose
def ny2_check(
    tau: RandomTime,
    F: Filtration,
    digest: Optional[str] = None,
    *,
    verbose=None,
) -> CheckReport:
    """Check the five equivalent characterizations of a pseudo-stopping time.

    The conditions are evaluated independently:

    * ``pseudo-stopping``: ``E[M_tau] = E[M_0]`` for every basis martingale.
    * ``ao-terminal``: ``Ao_T = P(tau < inf | F_T)``.
    * ``m-one``: the martingale ``m`` of the Azéma bundle is identically 1.
    * ``stopped-martingales``: every basis martingale stopped at ``tau`` is a
      martingale of the progressive enlargement of ``F`` by ``tau``.
    * ``ztilde-predictable``: ``Ztilde_t`` is ``F_{t-1}``-measurable for ``t >= 1``.

    When all of them hold, ``Ztilde`` is also asserted pathwise non-increasing.

    Parameters
    ----------
    %(tau)s
    %(filtration)s
    digest : str | None
        Digest of the instance. If None, the digest of ``F`` and ``tau`` is used.
    %(verbose)s

    Returns
    -------
    %(check_report)s
        The witness is the first counterexample of the first failing condition.
    """
    _check_time(tau, F)
    bundle = azema_bundle(tau, F)
    T = F.horizon
    witnesses = dict()

    witnesses["pseudo-stopping"] = _pseudo_defect(tau, F)

    finite = _cond_expect(indicator(tau.finite), F[T], F.space.probs)
    witnesses["ao-terminal"] = None
    for k in range(F.n):
        if bundle.Ao[T, k] != finite[k]:
            witnesses["ao-terminal"] = Witness(
                condition="ao-terminal",
                t=T,
                outcome=k,
                values=(bundle.Ao[T, k], finite[k]),
                tau=tau.values,
            )
            break

    ones = np.full(bundle.m.shape, Fraction(1), dtype=object)
    witnesses["m-one"] = _first_mismatch(bundle.m, ones, "m-one", tau)

    witnesses["stopped-martingales"] = None
    F_tau = progressive_enlargement(F, tau)
    for block, M in zip(F[T], basis_martingales(F)):
        defect = _first_martingale_defect(_stopped_process(M, tau), F_tau)
        if defect is not None:
            t, k, projected, previous = defect
            witnesses["stopped-martingales"] = Witness(
                condition="stopped-martingales",
                t=t,
                outcome=k,
                values=(projected, previous),
                block=block,
                tau=tau.values,
            )
            break

    defect = _predictable_defect(bundle.Ztilde, F)
    witnesses["ztilde-predictable"] = None
    if defect is not None:
        t, k, value, reference = defect
        witnesses["ztilde-predictable"] = Witness(
            condition="ztilde-predictable",
            t=t,
            outcome=k,
            values=(value, reference),
            tau=tau.values,
        )

    conditions = tuple((label, witnesses[label] is None) for label in _LABELS)
    witness = next(
        (witnesses[label] for label in _LABELS if witnesses[label] is not None), None
    )
    assertions = ()
    if all(value for _, value in conditions):
        nonincreasing = bool(np.all(bundle.Ztilde[1:] <= bundle.Ztilde[:-1]))
        assertions = (("ztilde-nonincreasing", nonincreasing),)
    if digest is None:
        digest = instance_digest(F.space, {"F": F}, {"tau": tau})
    report = CheckReport(
        name="ny2",
        conditions=conditions,
        instance_digest=digest,
        witness=witness,
        assertions=assertions,
    )
    logger.info("ny2 on %s: agree=%s, holds=%s", tau, report.agree, report.holds)
    return report
