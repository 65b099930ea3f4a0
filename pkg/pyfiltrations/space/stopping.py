"""Stopping times, honest times and progressive enlargement."""

from ..utils._checks import _check_type
from ..utils._docs import fill_doc
from .filtration import Filtration
from .partition import Partition
from .times import RandomTime


def _check_time(tau: RandomTime, F: Filtration, item_name: str = "tau") -> None:
    _check_type(tau, (RandomTime,), item_name)
    _check_type(F, (Filtration,), "F")
    tau._check_horizon(F.horizon, F.n, item_name)


@fill_doc
def is_stopping_time(tau: RandomTime, F: Filtration) -> bool:
    """Check if a random time is a stopping time of a filtration.

    Parameters
    ----------
    %(tau)s
    %(filtration)s

    Returns
    -------
    stopping : bool
        True if every event ``{tau = t}`` for ``t <= T`` is a union of blocks of
        ``F[t]``. The event ``{tau = inf}`` is then ``F[T]``-measurable by
        complementation.
    """
    _check_time(tau, F)
    for t, part in enumerate(F):
        if not part.is_measurable(tau.eq(t)):
            return False
    return True


@fill_doc
def is_honest(tau: RandomTime, F: Filtration) -> bool:
    """Check if a random time is honest.

    Parameters
    ----------
    %(tau)s
    %(filtration)s

    Returns
    -------
    honest : bool
        True if for every ``t`` in ``0..T`` and every block ``C`` of ``F[t]``, the
        time is constant on ``C ∩ {tau <= t}``. The level ``t = T`` covers the
        sigma-algebra at infinity: the time is ``F[T]``-measurable on ``{tau < inf}``.

    Notes
    -----
    In continuous time, ``tau`` is honest if on ``{tau < t}`` it equals an
    ``F_t``-measurable variable for every ``t > 0``. On the grid, ``{tau < t}`` for
    ``t`` in ``(s, s + 1)`` is ``{tau <= s}`` while ``F_t = F_s``, which yields the
    per-block test above.
    """
    _check_time(tau, F)
    for t, part in enumerate(F):
        observed = tau.le(t)
        for block in part:
            values = {tau[k] for k in block if observed[k]}
            if 1 < len(values):
                return False
    return True


@fill_doc
def progressive_enlargement(F: Filtration, tau: RandomTime) -> Filtration:
    """Smallest filtration containing ``F`` that makes ``tau`` a stopping time.

    Parameters
    ----------
    %(filtration)s
    %(tau)s

    Returns
    -------
    F_tau : Filtration
        Filtration whose partition at ``t`` is the common refinement of ``F[t]``
        and of the level sets ``{tau = 0}, ..., {tau = t}, {tau > t}``, i.e. of
        ``tau ∧ (t + 1)``. The event ``{tau = t}`` is the right limit of the
        information carried by ``tau ∧ s`` for ``s > t``.
    """
    _check_time(tau, F)
    parts = list()
    for t, part in enumerate(F):
        levels = tau.minimum(t + 1)
        parts.append(part.join(Partition.from_labels(levels)))
    return Filtration(parts, F.space)
