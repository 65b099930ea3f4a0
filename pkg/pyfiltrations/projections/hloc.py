"""Equivalent characterizations of a raw increasing process with oV = Vo."""

from typing import Optional

from .._report import CheckReport, Witness
from ..space.digest import instance_digest
from ..space.expectation import _check_process, _optional_projection
from ..space.filtration import Filtration
from ..space.process import _check_nondecreasing, lag
from ..utils._docs import fill_doc
from ..utils._logs import logger
from .optional import _dual_optional_projection, _lagged_optional_projection

_LABELS = ("lagged-compensator", "lagged-predictable", "projections-equal")


def _first_difference(X, Y):
    """First (t, outcome) where two processes differ, or None."""
    for t in range(X.shape[0]):
        for k in range(X.shape[1]):
            if X[t, k] != Y[t, k]:
                return t, k
    return None


@fill_doc
def hloc_check(V, F: Filtration, digest: Optional[str] = None) -> CheckReport:
    """Check the three equivalent conditions for ``oV = Vo``.

    The conditions are evaluated independently:

    * ``lagged-compensator``: ``E[V_{t-1} | F_t] = Vo_{t-1}`` for all ``t``.
    * ``lagged-predictable``: ``E[V_{t-1} | F_t] = E[V_{t-1} | F_{t-1}]`` for all
      ``t``, i.e. the optional projection of the lagged process is predictable.
    * ``projections-equal``: ``oV = Vo``.

    Parameters
    ----------
    %(increasing_process)s
    %(filtration)s
    digest : str | None
        Digest of the instance the process belongs to. If None, the digest of the
        filtration and the process is used.

    Returns
    -------
    %(check_report)s
        The witness is the first coordinate of the first failing condition.
    """
    V = _check_process(V, F, "V")
    _check_nondecreasing(V)
    oV = _optional_projection(V, F)
    Vo = _dual_optional_projection(V, F)
    lagged = _lagged_optional_projection(V, F)

    pairs = (
        (lagged, lag(Vo)),
        (lagged, lag(oV)),
        (oV, Vo),
    )
    conditions = list()
    witness = None
    for label, (lhs, rhs) in zip(_LABELS, pairs):
        location = _first_difference(lhs, rhs)
        conditions.append((label, location is None))
        if location is not None and witness is None:
            t, k = location
            witness = Witness(
                condition=label, t=t, outcome=k, values=(lhs[t, k], rhs[t, k])
            )
    if digest is None:
        digest = instance_digest(F.space, {"F": F}, processes={"V": V})
    report = CheckReport(
        name="hloc",
        conditions=tuple(conditions),
        instance_digest=digest,
        witness=witness,
    )
    logger.debug("hloc conditions: %s", report.conditions)
    return report
