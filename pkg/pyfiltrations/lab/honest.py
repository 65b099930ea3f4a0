"""Honest times which are pseudo-stopping times."""

from typing import Optional, Tuple, Union

from .._report import CheckReport, Witness
from ..projections.azema import azema_bundle
from ..space.digest import instance_digest
from ..space.expectation import _cond_expect
from ..space.filtration import FilteredPair, Filtration
from ..space.process import indicator
from ..space.stopping import _check_time, is_honest, is_stopping_time
from ..space.times import INF, RandomTime
from ..utils._checks import _check_type
from ..utils._config import get_config
from ..utils._docs import fill_doc
from ..utils._logs import logger, verbose
from .enumeration import _check_cap, _iter_codes, count_stopping_times
from .immersion import is_immersed
from .pseudo import is_pseudo_stopping


def _canonical_time(tau: RandomTime, F: Filtration):
    """Candidate ``sigma = inf{t: Ao_t > 0}`` and its two defects.

    Returns sigma, the first finite outcome where ``sigma != tau``, and the first
    outcome of ``{sigma < inf}`` where ``P(tau < inf | F_sigma)`` differs from
    ``P(tau < inf | F_T)``.
    """
    Ao = azema_bundle(tau, F).Ao
    T = F.horizon
    sigma = list()
    for k in range(F.n):
        positive = [t for t in range(T + 1) if Ao[t, k] > 0]
        sigma.append(positive[0] if len(positive) != 0 else INF)
    sigma = RandomTime(sigma)

    mismatch = next(
        (k for k in range(F.n) if tau[k] != INF and sigma[k] != tau[k]), None
    )
    probs = F.space.probs
    finite = indicator(tau.finite)
    levels = [_cond_expect(finite, part, probs) for part in F]
    unfrozen = next(
        (
            k
            for k in range(F.n)
            if sigma[k] != INF and levels[sigma[k]][k] != levels[T][k]
        ),
        None,
    )
    return sigma, mismatch, unfrozen, levels


def _frozen_at(sigma: RandomTime, tau: RandomTime, F: Filtration) -> bool:
    """True if ``P(tau < inf | F_sigma) = P(tau < inf | F_T)`` on ``{sigma < inf}``."""
    probs = F.space.probs
    finite = indicator(tau.finite)
    terminal = _cond_expect(finite, F[F.horizon], probs)
    for t in range(F.horizon + 1):
        projected = _cond_expect(finite, F[t], probs)
        if any(projected[k] != terminal[k] for k in range(F.n) if sigma[k] == t):
            return False
    return True


def _search_stopping_time(tau: RandomTime, F: Filtration) -> bool:
    """Exhaustive search of an F-stopping time equal to tau on {tau < inf}, with
    finiteness decided at that time."""
    T = F.horizon
    target = tau.codes(T)
    finite = tau.finite
    for codes in _iter_codes(F):
        if (codes[finite] == target[finite]).all():
            sigma = RandomTime([INF if c == T + 1 else int(c) for c in codes])
            if _frozen_at(sigma, tau, F):
                return True
    return False


@fill_doc
@verbose
def honest_pseudo_check(
    tau: RandomTime,
    F: Filtration,
    cap: Optional[int] = None,
    digest: Optional[str] = None,
    *,
    verbose=None,
) -> CheckReport:
    """Check that honest pseudo-stopping times are stopping times on ``{tau < inf}``.

    The conditions are evaluated independently:

    * ``canonical-stopping-time``: ``tau`` equals the F-stopping time
      ``sigma = inf{t: Ao_t > 0}`` on ``{tau < inf}``, and
      ``P(tau < inf | F_sigma) = P(tau < inf | F_T)`` on ``{sigma < inf}``.
    * ``searched-stopping-time``: some F-stopping time found by exhaustive
      enumeration satisfies the same two properties. Only evaluated when ``F`` has
      at most ``cap`` stopping times.
    * ``honest-and-pseudo``: ``tau`` is honest and pseudo-stopping.

    When ``tau`` is honest and pseudo-stopping, ``tau = inf{t: Ao_t > 0}`` on
    ``{tau < inf}`` is also asserted.

    Parameters
    ----------
    %(tau)s
    %(filtration)s
    %(cap)s
        If None, the ``ENUMERATION_CAP`` configuration value is used.
    digest : str | None
        Digest of the instance. If None, the digest of ``F`` and ``tau`` is used.
    %(verbose)s

    Returns
    -------
    %(check_report)s
        The details carry the individual ``honest`` and ``pseudo`` verdicts and the
        canonical time ``sigma``.

    Notes
    -----
    When ``tau`` is finite, the condition on ``P(tau < inf | F_sigma)`` is vacuous.
    It is needed otherwise: on two outcomes with ``F_0`` trivial and ``F_T``
    discrete, ``tau = 0`` on the first outcome and ``inf`` elsewhere equals the
    stopping time 0 on ``{tau < inf}``, is honest, and is not pseudo-stopping.
    """
    _check_time(tau, F)
    cap = get_config()["ENUMERATION_CAP"] if cap is None else cap
    cap = _check_cap(cap)
    sigma, mismatch, unfrozen, levels = _canonical_time(tau, F)
    honest = is_honest(tau, F)
    pseudo = is_pseudo_stopping(tau, F)
    canonical = mismatch is None and unfrozen is None
    conditions = [("canonical-stopping-time", canonical)]
    if count_stopping_times(F) <= cap:
        conditions.append(("searched-stopping-time", _search_stopping_time(tau, F)))
    else:
        logger.debug("Exhaustive search skipped, F exceeds the cap of %i.", cap)
    conditions.append(("honest-and-pseudo", honest and pseudo))
    conditions = tuple(conditions)

    assertions = ()
    if honest and pseudo:
        assertions = (("canonical-time", mismatch is None),)
    witness = None
    if len({value for _, value in conditions}) != 1:
        if mismatch is not None:
            witness = Witness(
                condition="canonical-stopping-time",
                outcome=mismatch,
                values=(),
                tau=tau.values,
            )
        elif unfrozen is not None:
            witness = Witness(
                condition="canonical-stopping-time",
                t=sigma[unfrozen],
                outcome=unfrozen,
                values=(
                    levels[sigma[unfrozen]][unfrozen],
                    levels[F.horizon][unfrozen],
                ),
                tau=tau.values,
            )
        else:
            witness = Witness(condition="honest-and-pseudo", tau=tau.values)
    if digest is None:
        digest = instance_digest(F.space, {"F": F}, {"tau": tau})
    report = CheckReport(
        name="honest",
        conditions=conditions,
        instance_digest=digest,
        witness=witness,
        assertions=assertions,
        details={"honest": honest, "pseudo": pseudo, "sigma": sigma.values},
    )
    logger.info("honest on %s: agree=%s, holds=%s", tau, report.agree, report.holds)
    return report


@fill_doc
def honest_immersion_check(
    tau: RandomTime, pair: FilteredPair, *, return_witness: bool = False
) -> Union[bool, Tuple[bool, Optional[Witness]]]:
    """Check that honest non-F-stopping G-stopping times rule out immersion.

    If ``tau`` is F-honest, is a G-stopping time, and does not equal an F-stopping
    time on ``{tau < inf}`` with finiteness decided at that time, then ``F`` is not
    immersed in ``G``.

    Parameters
    ----------
    %(tau)s
    %(pair)s
    return_witness : bool
        If True, the counterexample is returned along the verdict.

    Returns
    -------
    holds : bool
        True if the implication holds on the instance.
    witness : Witness | None
        The time and the immersion verdict when the implication fails. Only
        returned if ``return_witness=True``.
    """
    _check_type(pair, (FilteredPair,), "pair")
    _check_time(tau, pair.F)
    F, G = pair.F, pair.G
    premise = is_honest(tau, F) and is_stopping_time(tau, G)
    if premise:
        _, mismatch, unfrozen, _ = _canonical_time(tau, F)
        premise = mismatch is not None or unfrozen is not None
    holds = not premise or not is_immersed(pair)
    witness = None
    if not holds:
        witness = Witness(condition="honest-immersion", tau=tau.values)
    if return_witness:
        return holds, witness
    return holds
