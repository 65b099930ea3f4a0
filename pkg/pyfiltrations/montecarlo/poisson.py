"""Midpoint of the first two jumps of a Poisson process."""

import math
from typing import Dict, List, Tuple

import numpy as np
from numpy.random import SeedSequence
from numpy.typing import NDArray

from ..utils._checks import _check_positive, _check_value
from ..utils._docs import fill_doc
from ..utils._logs import logger, verbose
from ._rng import _check_n_paths, _is_wide, _mean_stderr, _sample, _streams
from .report import N_SIGMA, McReport

# (T1, t) of the first check of the closed form of Z~
FIRST_ZTILDE_POINT = (0.3, 0.8)
# largest t - T1 of a check, in units of 1 / lam, keeps the acceptance rate of the
# nested sampling above exp(-2)
MAX_ELAPSED = 2.0
N_ZTILDE_CHECKS = 5


def _compensated(s: NDArray[float], T1, T2, lam: float) -> NDArray[float]:
    """Value at ``s`` of ``M = 1{T2 <= s} - (lam * (s ^ T2) - lam * (s ^ T1))``."""
    return (T2 <= s).astype(float) - lam * (np.minimum(s, T2) - np.minimum(s, T1))


def _poisson_chunk(
    size: int, seed_sequence: SeedSequence, lam: float
) -> Tuple[NDArray[float], NDArray[float]]:
    rng = np.random.default_rng(seed_sequence)
    T1 = rng.exponential(1 / lam, size)
    T2 = T1 + rng.exponential(1 / lam, size)
    tau = (T1 + T2) / 2

    m_tau = _compensated(tau, T1, T2, lam)
    closed_form = -lam * (T2 - T1) / 2
    if not np.allclose(m_tau, closed_form, rtol=1e-12, atol=1e-12):
        k = int(np.argmax(np.abs(m_tau - closed_form)))
        raise RuntimeError(
            f"M_tau = {m_tau[k]} differs from -lam * (T2 - T1) / 2 = "
            f"{closed_form[k]} on path {k}."
        )
    return m_tau, _compensated(T2, T1, T2, lam)


def _ztilde_check(
    T1: float, t: float, lam: float, n_inner: int, rng: np.random.Generator
) -> Dict:
    """Compare ``exp(-lam (t - T1))`` with a nested estimate of ``P(tau > t | ...)``.

    The conditional law given ``T1`` and ``T2 > t`` is sampled by rejection of the
    inter-arrival time.
    """
    elapsed = t - T1
    accepted: List[NDArray[float]] = list()
    n_accepted = 0
    while n_accepted < n_inner:
        gaps = rng.exponential(1 / lam, n_inner)
        gaps = gaps[elapsed < gaps]
        accepted.append(gaps)
        n_accepted += gaps.size
    gaps = np.concatenate(accepted)[:n_inner]
    estimate = math.fsum(T1 + gaps / 2 > t) / n_inner

    closed_form = math.exp(-lam * elapsed)
    stderr = math.sqrt(closed_form * (1 - closed_form) / n_inner)
    return {
        "T1": T1,
        "t": t,
        "closed_form": closed_form,
        "estimate": estimate,
        "stderr": stderr,
        "passed": abs(estimate - closed_form) <= N_SIGMA * stderr,
    }


def _ztilde_checks(
    lam: float, n_inner: int, seed_sequence: SeedSequence
) -> List[Dict]:
    rng = np.random.default_rng(seed_sequence)
    T1, t = FIRST_ZTILDE_POINT
    points = [(T1, T1 + min(t - T1, MAX_ELAPSED / lam))]
    for _ in range(N_ZTILDE_CHECKS - 1):
        T1 = rng.exponential(1 / lam)
        gap = rng.exponential(1 / lam)
        points.append((T1, T1 + rng.random() * min(gap, MAX_ELAPSED / lam)))
    checks = [_ztilde_check(T1, t, lam, n_inner, rng) for T1, t in points]
    for check in checks:
        logger.debug(
            "Z~ at T1=%.4f, t=%.4f: closed form %.4f, nested %.4f ± %.4f",
            check["T1"],
            check["t"],
            check["closed_form"],
            check["estimate"],
            check["stderr"],
        )
    return checks


@fill_doc
@verbose
def poisson_example(
    lam: float,
    n_paths: int,
    seed: int,
    *,
    stop_at: str = "tau",
    n_inner: int = 10000,
    n_jobs=None,
    verbose=None,
) -> McReport:
    """Estimate ``E[M_tau]`` at the midpoint of the first two jumps of ``N``.

    ``N`` is a Poisson process of intensity ``lam``, ``T1`` and ``T2`` its first
    two jump times, and ``M_s = 1{T2 <= s} - lam (s ^ T2 - s ^ T1)``. At
    ``tau = (T1 + T2) / 2``, ``M_tau = -lam (T2 - T1) / 2`` exactly, so
    ``E[M_tau] = -1/2 != M_0``: ``tau`` is not a pseudo-stopping time.

    Parameters
    ----------
    lam : float
        Intensity of the Poisson process.
    %(n_paths)s
    %(seed)s
    stop_at : ``'tau'`` | ``'T2'``
        Evaluation time. At the stopping time ``T2`` the target is 0.
    n_inner : int
        Number of accepted inner samples of each nested estimate of ``Z~``.
    %(n_jobs)s
    %(verbose)s

    Returns
    -------
    %(mc_report)s

    Notes
    -----
    The details hold both estimates and five checks of the closed form
    ``Z~_t = exp(-lam (t - T1))`` on ``{T1 <= t < T2}``, the first one at
    ``(T1, t) = (0.3, 0.8)``, moved to ``t = T1 + 2 / lam`` when ``lam > 4``. The
    report fails if one of them fails.
    """
    _check_positive(lam, "lam")
    lam = float(lam)
    n_paths = _check_n_paths(n_paths)
    _check_value(stop_at, ("tau", "T2"), "stop_at")
    n_inner = _check_n_paths(n_inner, item_name="n_inner")
    paths_seq, checks_seq = _streams(seed, 2)

    m_tau, m_T2 = _sample(_poisson_chunk, n_paths, paths_seq, n_jobs, lam)
    checks = _ztilde_checks(lam, n_inner, checks_seq)
    tau_estimate = _mean_stderr(m_tau)
    T2_estimate = _mean_stderr(m_T2)
    estimate, stderr = tau_estimate if stop_at == "tau" else T2_estimate

    details = {
        "lam": lam,
        "stop_at": stop_at,
        "tau": list(tau_estimate),
        "compensated_T2": list(T2_estimate),
        "ztilde_checks": checks,
        "subchecks_passed": all(check["passed"] for check in checks),
    }
    if n_paths == 1:
        details["degenerate"] = True
    report = McReport(
        name="poisson",
        n_paths=n_paths,
        estimate=estimate,
        stderr=stderr,
        seed=seed,
        target=-0.5 if stop_at == "tau" else 0.0,
        wide_tolerance=_is_wide(n_paths),
        details=details,
    )
    logger.info("%r", report)
    return report
