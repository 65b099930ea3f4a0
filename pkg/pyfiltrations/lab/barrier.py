"""Jumps of the dual optional projection of a G-stopping time."""

from typing import List, NamedTuple, Optional, Tuple, Union

import numpy as np

from .._report import CheckReport, Witness
from .._typing import Process
from ..projections.azema import azema_bundle
from ..space.digest import instance_digest
from ..space.expectation import _cond_expect
from ..space.filtration import FilteredPair, Filtration
from ..space.process import increments, indicator
from ..space.stopping import _check_time, is_stopping_time
from ..space.times import INF, RandomTime
from ..utils._checks import _check_type
from ..utils._docs import fill_doc
from ..utils._logs import logger
from .immersion import is_immersed


class StoppingTimeDecomposition(NamedTuple):
    """Split of a G-stopping time along the jumps of its dual optional projection.

    Parameters
    ----------
    tau_c : RandomTime
        ``tau`` where ``Ao`` does not jump at ``tau``, infinity elsewhere.
    tau_d : RandomTime
        ``tau`` where ``Ao`` jumps at ``tau``, infinity elsewhere.
    jump_times : list of RandomTime
        F-stopping times ``t`` on ``{dAo_t > 0}`` and infinity elsewhere, for every
        ``t`` where ``Ao`` jumps somewhere.
    """

    tau_c: RandomTime
    tau_d: RandomTime
    jump_times: List[RandomTime]


def _check_g_stopping(tau: RandomTime, pair: FilteredPair) -> None:
    _check_type(pair, (FilteredPair,), "pair")
    _check_time(tau, pair.G)
    if not is_stopping_time(tau, pair.G):
        raise ValueError("Argument 'tau' must be a stopping time of 'G'.")


def _at_tau(X: Process, tau: RandomTime) -> list:
    """Values ``X_tau`` on ``{tau < inf}``, None elsewhere."""
    return [None if v == INF else X[v, k] for k, v in enumerate(tau)]


@fill_doc
def decompose_stopping_time(
    tau: RandomTime, pair: FilteredPair
) -> StoppingTimeDecomposition:
    """Decompose a G-stopping time as ``tau = min(tau_c, tau_d)``.

    Parameters
    ----------
    %(tau)s
        It must be a stopping time of ``G``.
    %(pair)s

    Returns
    -------
    decomposition : StoppingTimeDecomposition
        ``tau_d`` is ``tau`` on ``D = {tau < inf, dAo_tau > 0}`` with ``Ao`` the
        F-dual optional projection of ``1{tau <= t}``, ``tau_c`` is ``tau`` off
        ``D``. Both are G-stopping times and the graph of ``tau_d`` is contained in
        the graphs of the jump times.

    Notes
    -----
    On a finite space with strictly positive probabilities, ``dAo_tau`` is at least
    ``p(k) / P(C)`` on the block ``C`` of ``F[tau]`` containing ``k``, so ``D`` is
    the whole of ``{tau < inf}`` and ``tau_c`` is identically infinite. A nontrivial
    continuous part only exists in continuous time, see
    `~pyfiltrations.montecarlo.cox_uniformity`.
    """
    _check_g_stopping(tau, pair)
    Ao = azema_bundle(tau, pair.F).Ao
    jumps = increments(Ao)
    on_jump = [v != INF and jumps[v, k] > 0 for k, v in enumerate(tau)]
    tau_d = RandomTime([v if d else INF for v, d in zip(tau, on_jump)])
    tau_c = RandomTime([INF if d else v for v, d in zip(tau, on_jump)])
    jump_times = [
        RandomTime([t if jump > 0 else INF for jump in jumps[t]])
        for t in range(pair.horizon + 1)
        if np.any(jumps[t] > 0)
    ]
    return StoppingTimeDecomposition(tau_c, tau_d, jump_times)


@fill_doc
def decompose_check(
    tau: RandomTime, pair: FilteredPair, digest: Optional[str] = None
) -> CheckReport:
    """Check the properties of `decompose_stopping_time`.

    Parameters
    ----------
    %(tau)s
        It must be a stopping time of ``G``.
    %(pair)s
    digest : str | None
        Digest of the instance. If None, the digest of the pair and ``tau`` is used.

    Returns
    -------
    %(check_report)s
        Assertions ``minimum`` (``tau = min(tau_c, tau_d)``), ``g-stopping`` (both
        parts are G-stopping times), ``jump-graphs`` (the graph of ``tau_d`` lies
        in the graphs of the jump times) and ``f-stopping`` (the jump times are
        F-stopping times).
    """
    tau_c, tau_d, jump_times = decompose_stopping_time(tau, pair)
    minimum = all(min(c, d) == v for c, d, v in zip(tau_c, tau_d, tau))
    g_stopping = is_stopping_time(tau_c, pair.G) and is_stopping_time(tau_d, pair.G)
    graphs = all(
        v == INF or any(sigma[k] == v for sigma in jump_times)
        for k, v in enumerate(tau_d)
    )
    f_stopping = all(is_stopping_time(sigma, pair.F) for sigma in jump_times)
    if digest is None:
        digest = instance_digest(pair.space, {"F": pair.F, "G": pair.G}, {"tau": tau})
    return CheckReport(
        name="decompose",
        instance_digest=digest,
        assertions=(
            ("minimum", minimum),
            ("g-stopping", g_stopping),
            ("jump-graphs", graphs),
            ("f-stopping", f_stopping),
        ),
        details={"jump_times": len(jump_times), "tau_d": tau_d.values},
    )


@fill_doc
def gstoping_d_check(
    tau: RandomTime, pair: FilteredPair, digest: Optional[str] = None
) -> CheckReport:
    """Check the conditional law of ``Ao_tau`` given ``F_T`` under immersion.

    With ``Ao`` the F-dual optional projection of ``1{tau <= t}``, the identity

    ``P(Ao_tau = u, tau < inf | F_T) = sum_t 1{Ao_t = u} dAo_t``

    is verified pointwise for every level ``u`` taken by ``Ao_tau`` on
    ``{tau < inf}`` or by ``Ao`` at some time.

    Parameters
    ----------
    %(tau)s
        It must be a stopping time of ``G``.
    %(pair)s
        ``F`` must be immersed in ``G``.
    digest : str | None
        Digest of the instance. If None, the digest of the pair and ``tau`` is used.

    Returns
    -------
    %(check_report)s
        A single assertion ``conditional-law``; the witness holds the first level
        and outcome where the identity fails, with both sides.
    """
    _check_g_stopping(tau, pair)
    if not is_immersed(pair):
        raise ValueError("Argument 'pair' must satisfy 'F' immersed in 'G'.")
    F = pair.F
    T = F.horizon
    Ao = azema_bundle(tau, F).Ao
    jumps = increments(Ao)
    at_tau = _at_tau(Ao, tau)
    levels = sorted(
        {u for u in at_tau if u is not None} | {u for u in Ao.flat}
    )
    witness = None
    for u in levels:
        hits = np.array([u_k is not None and u_k == u for u_k in at_tau], dtype=bool)
        lhs = _cond_expect(indicator(hits), F[T], F.space.probs)
        rhs = sum(
            np.where(Ao[t] == u, jumps[t], 0 * jumps[t]) for t in range(T + 1)
        )
        mismatch = np.flatnonzero(lhs != rhs)
        if mismatch.size != 0:
            k = int(mismatch[0])
            witness = Witness(
                condition="conditional-law", outcome=k, values=(u, lhs[k], rhs[k])
            )
            break
    if digest is None:
        digest = instance_digest(pair.space, {"F": F, "G": pair.G}, {"tau": tau})
    report = CheckReport(
        name="gstoping-d",
        instance_digest=digest,
        witness=witness,
        assertions=(("conditional-law", witness is None),),
        details={"levels": len(levels)},
    )
    logger.debug("gstoping-d over %i levels: %s", len(levels), report.sound)
    return report


@fill_doc
def barrier_representation_check(
    tau: RandomTime, F: Filtration, *, return_witness: bool = False
) -> Union[bool, Tuple[bool, Optional[Witness]]]:
    """Check that a random time is the first passage of ``Ao`` above ``Ao_tau``.

    Parameters
    ----------
    %(tau)s
    %(filtration)s
    return_witness : bool
        If True, the counterexample is returned along the verdict.

    Returns
    -------
    holds : bool
        True if ``inf{t: Ao_t >= Ao_tau} = tau`` on ``{tau < inf}``, with ``Ao`` the
        dual optional projection of ``1{tau <= t}``. On ``{tau = inf}`` the
        statement is empty.
    witness : Witness | None
        First outcome where the first passage time differs from ``tau``, with both
        times. Only returned if ``return_witness=True``.
    """
    _check_time(tau, F)
    Ao = azema_bundle(tau, F).Ao
    witness = None
    for k, v in enumerate(tau):
        if v == INF:
            continue
        passage = next(t for t in range(F.horizon + 1) if Ao[t, k] >= Ao[v, k])
        if passage != v:
            witness = Witness(
                condition="first-passage", outcome=k, values=(passage, v)
            )
            break
    if return_witness:
        return witness is None, witness
    return witness is None
