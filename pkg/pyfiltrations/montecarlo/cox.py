"""Law of the dual optional projection at a Cox default time."""

import math
from typing import Tuple

import numpy as np
from numpy.random import SeedSequence
from numpy.typing import NDArray
from scipy.stats import kstest

from ..utils._checks import _check_type, _check_value
from ..utils._docs import fill_doc
from ..utils._logs import logger, verbose
from ._rng import _check_n_paths, _is_wide, _mean_stderr, _sample, _streams
from .report import McReport

# value of Ao at infinity under the decaying hazard
DECAYING_LIMIT = 1 - math.exp(-1)


def _hazard(t: NDArray[float], intensity: str) -> NDArray[float]:
    """Cumulated hazard ``Lambda_t``, deterministic hence adapted."""
    if intensity == "unit":
        return t
    return -np.expm1(-t)


def _default_time(theta: NDArray[float], intensity: str) -> NDArray[float]:
    """First time ``Lambda_t >= theta``, ``inf`` if never."""
    if intensity == "unit":
        return theta.copy()
    with np.errstate(divide="ignore", invalid="ignore"):
        tau = -np.log1p(-theta)
    return np.where(theta < 1, tau, np.inf)


def _cox_chunk(
    size: int,
    seed_sequence: SeedSequence,
    intensity: str,
    adversarial: bool,
) -> Tuple[NDArray[float]]:
    rng = np.random.default_rng(seed_sequence)
    theta = rng.exponential(1.0, size)
    u = rng.random(size)
    # the self-check defaults at half the barrier, the projection still assumes
    # the barrier is Exp(1)
    barrier = theta / 2 if adversarial else theta
    tau = _default_time(barrier, intensity)

    finite = np.isfinite(tau)
    Ao = np.full(size, DECAYING_LIMIT)
    Ao[finite] = -np.expm1(-_hazard(tau[finite], intensity))
    if intensity == "decaying":
        # randomized probability integral transform of the atom at Ao_inf
        Ao = np.where(finite, Ao, DECAYING_LIMIT + u * (1 - DECAYING_LIMIT))
    return (Ao,)


@fill_doc
@verbose
def cox_uniformity(
    n_paths: int,
    seed: int,
    *,
    intensity: str = "unit",
    adversarial: bool = False,
    n_jobs=None,
    verbose=None,
) -> McReport:
    """Test the uniformity of ``Ao_tau`` for a Cox default time.

    A barrier ``Theta ~ Exp(1)`` independent of ``F`` is drawn and ``tau`` is the
    first time the hazard ``Lambda`` crosses it. The dual optional projection of
    ``1{tau <= t}`` is ``Ao_t = 1 - exp(-Lambda_t)`` and ``Ao_tau`` is uniform on
    ``[0, 1]``.

    Parameters
    ----------
    %(n_paths)s
        At least 10 paths are required.
    %(seed)s
    intensity : ``'unit'`` | ``'decaying'``
        ``'unit'`` uses ``Lambda_t = t``. ``'decaying'`` uses
        ``Lambda_t = 1 - exp(-t)``: ``tau = inf`` on ``{Theta >= 1}`` and
        ``Ao_tau := Ao_inf`` is an atom of mass ``exp(-1)``, which is spread
        uniformly on ``[Ao_inf, 1]`` before the test.
    adversarial : bool
        If True, ``tau`` crosses half the barrier while ``Ao`` is left unchanged.
        ``Ao_tau`` is then not uniform and the report must fail.
    %(n_jobs)s
    %(verbose)s

    Returns
    -------
    %(mc_report)s
        The Kolmogorov-Smirnov statistic against the uniform law, and the mean of
        ``Ao_tau`` with target ``1/2``.
    """
    n_paths = _check_n_paths(n_paths, minimum=10)
    _check_value(intensity, ("unit", "decaying"), "intensity")
    _check_type(adversarial, (bool,), "adversarial")
    (seed_sequence,) = _streams(seed, 1)

    (values,) = _sample(
        _cox_chunk, n_paths, seed_sequence, n_jobs, intensity, adversarial
    )
    result = kstest(values, "uniform")
    estimate, stderr = _mean_stderr(values)
    report = McReport(
        name="cox",
        n_paths=n_paths,
        estimate=estimate,
        stderr=stderr,
        seed=seed,
        target=0.5,
        ks_statistic=float(result.statistic),
        wide_tolerance=_is_wide(n_paths),
        details={
            "intensity": intensity,
            "adversarial": adversarial,
            "ks_pvalue": float(result.pvalue),
        },
    )
    logger.info("%r", report)
    return report
