"""Williams' pseudo-stopping time of a Brownian motion."""

import math
from typing import Tuple

import numpy as np
from numpy.random import SeedSequence
from numpy.typing import NDArray

from ..utils._checks import _check_positive, _check_type, _check_value
from ..utils._docs import fill_doc
from ..utils._logs import logger, verbose
from ._rng import _check_n_paths, _is_wide, _mean_stderr, _sample, _streams
from .report import McReport

# extremum shift of a Brownian motion monitored on a grid, in units of sqrt(dt)
MONITORING_SHIFT = 0.5826


def _zero_in_step(
    prev: NDArray[float], new: NDArray[float], dt: float, u: NDArray[float]
) -> NDArray[bool]:
    """Whether the Brownian bridge from ``prev`` to ``new`` over ``dt`` hits 0.

    A sign change always hits 0. Otherwise the bridge touches 0 with probability
    ``exp(-2 prev new / dt)``, decided by the uniform draws ``u``.
    """
    product = prev * new
    with np.errstate(under="ignore"):
        touch = u < np.exp(-2 * np.maximum(product, 0.0) / dt)
    return (product <= 0) | touch


def _williams_chunk(
    size: int,
    seed_sequence: SeedSequence,
    dt: float,
    lower: float,
    shift: float,
    stop_at: str,
) -> Tuple[NDArray[float], NDArray[float], NDArray[float]]:
    """Simulate ``size`` paths until ``T1 ^ T_{-lower}``.

    Returns the value of ``B`` and the time at the evaluation time, and a float
    flag set to 1 on paths which exit through the lower level.
    """
    rng = np.random.default_rng(seed_sequence)
    sqrt_dt = math.sqrt(dt)
    up, down = 1.0 - shift, -lower + shift

    b = np.zeros(size)
    running_max = np.zeros(size)
    argmax = np.zeros(size)
    # max and argmax on [0, last zero]
    cand_max = np.zeros(size)
    cand_time = np.zeros(size)
    exit_time = np.zeros(size)
    exit_down = np.zeros(size, dtype=bool)

    active = np.arange(size)
    step = 0
    while active.size != 0:
        step += 1
        prev = b[active]
        new = prev + sqrt_dt * rng.standard_normal(active.size)

        # zeros between grid points are found through the bridge law
        crossing = active[_zero_in_step(prev, new, dt, rng.random(active.size))]
        cand_max[crossing] = running_max[crossing]
        cand_time[crossing] = argmax[crossing]

        higher = new > running_max[active]
        running_max[active[higher]] = new[higher]
        argmax[active[higher]] = step * dt
        b[active] = new

        hit_down = new <= down
        done = (new >= up) | hit_down
        exit_time[active[done]] = step * dt
        exit_down[active[hit_down]] = True
        active = active[~done]
    logger.debug("Chunk of %i paths exited after %i steps.", size, step)

    # whether tau falls after T_{-lower} is drawn exactly for every path
    u = rng.random(size)

    if stop_at == "T1":
        value = np.where(exit_down, -lower, 1.0)
        return value, exit_time, exit_down.astype(float)

    cand_max = np.where(cand_time > 0, np.minimum(cand_max + shift, 1.0), 0.0)
    running_max = np.where(argmax > 0, np.minimum(running_max + shift, 1.0), 0.0)
    # the first excursion reaching the running max returns to 0 before 1
    after = exit_down & (u < 1.0 - running_max)
    value = np.where(exit_down, np.where(after, -lower, running_max), cand_max)
    time = np.where(exit_down, np.where(after, exit_time, argmax), cand_time)
    return value, time, exit_down.astype(float)


def _williams_values(
    n_paths: int,
    dt: float,
    seed_sequence: SeedSequence,
    lower: float,
    correction: bool,
    stop_at: str,
    n_jobs,
):
    shift = MONITORING_SHIFT * math.sqrt(dt) if correction else 0.0
    if lower <= shift:
        raise ValueError(
            "Argument 'dt' is too large for the lower exit level. "
            f"Provided: dt={dt}, lower={lower}."
        )
    b, time, down = _sample(
        _williams_chunk, n_paths, seed_sequence, n_jobs, dt, lower, shift, stop_at
    )
    return {"B": b, "B2": b**2 - time}, time, down


def _check_williams(n_paths, dt, lower, correction, stop_at, martingale):
    n_paths = _check_n_paths(n_paths)
    _check_positive(dt, "dt")
    _check_positive(lower, "lower")
    _check_type(correction, (bool,), "correction")
    _check_value(stop_at, ("tau", "T1"), "stop_at")
    _check_value(martingale, ("B", "B2"), "martingale")
    return n_paths, float(dt), float(lower)


@fill_doc
@verbose
def williams_tau(
    n_paths: int,
    dt: float,
    seed: int,
    *,
    lower: float = 1.0,
    correction: bool = True,
    stop_at: str = "tau",
    martingale: str = "B",
    n_jobs=None,
    verbose=None,
) -> McReport:
    """Estimate ``E[M_tau]`` at the argmax of a Brownian motion before its last zero.

    Brownian paths are simulated on a grid of step ``dt`` until ``T1``, the first
    hitting time of 1. ``sigma`` is the last zero before ``T1`` and ``tau`` the
    time of the maximum on ``[0, sigma]``. ``tau`` is a pseudo-stopping time: for
    every uniformly integrable martingale ``M``, ``E[M_tau] = M_0``.

    Parameters
    ----------
    %(n_paths)s
    dt : float
        Step of the simulation grid.
    %(seed)s
    lower : float
        The test martingales are stopped at ``T1 ^ T_{-lower}``, which makes them
        uniformly integrable.
    correction : bool
        If True, the running maximum and the exit levels are shifted by
        ``0.5826 * sqrt(dt)`` to correct for the discrete monitoring.
    stop_at : ``'tau'`` | ``'T1'``
        Evaluation time. ``'T1'`` evaluates the martingales at the stopping time
        ``T1 ^ T_{-lower}``.
    martingale : ``'B'`` | ``'B2'``
        Test martingale, ``B`` or ``B^2 - t``, both stopped at ``T1 ^ T_{-lower}``.
        The estimate for the other one is stored in the details.
    %(n_jobs)s
    %(verbose)s

    Returns
    -------
    %(mc_report)s
    """
    n_paths, dt, lower = _check_williams(
        n_paths, dt, lower, correction, stop_at, martingale
    )
    (seed_sequence,) = _streams(seed, 1)
    values, time, down = _williams_values(
        n_paths, dt, seed_sequence, lower, correction, stop_at, n_jobs
    )
    estimate, stderr = _mean_stderr(values[martingale])
    other = "B2" if martingale == "B" else "B"
    details = {
        "martingale": martingale,
        "stop_at": stop_at,
        "lower": lower,
        "correction": correction,
        other: list(_mean_stderr(values[other])),
        "mean_time": math.fsum(time) / n_paths,
        "lower_exit_fraction": math.fsum(down) / n_paths,
    }
    if n_paths == 1:
        details["degenerate"] = True
    report = McReport(
        name="williams",
        n_paths=n_paths,
        estimate=estimate,
        stderr=stderr,
        seed=seed,
        target=0.0,
        dt=dt,
        wide_tolerance=_is_wide(n_paths),
        details=details,
    )
    logger.info("%r", report)
    return report


@fill_doc
@verbose
def williams_refinement_check(
    n_paths: int,
    dt: float,
    seed: int,
    *,
    lower: float = 1.0,
    correction: bool = True,
    martingale: str = "B",
    n_jobs=None,
    verbose=None,
) -> McReport:
    """Compare the Williams estimates on the grids ``dt`` and ``dt / 2``.

    The two grids use independent streams. The report estimates the difference
    of the two estimates, with target 0 and the combined standard error, so it
    passes if ``|delta| <= 3 * sqrt(se1**2 + se2**2)``.

    Parameters
    ----------
    %(n_paths)s
    dt : float
        Step of the coarse grid.
    %(seed)s
    lower : float
        Lower exit level, see `williams_tau`.
    correction : bool
        Discrete monitoring correction, see `williams_tau`.
    martingale : ``'B'`` | ``'B2'``
        Test martingale.
    %(n_jobs)s
    %(verbose)s

    Returns
    -------
    %(mc_report)s
    """
    n_paths, dt, lower = _check_williams(
        n_paths, dt, lower, correction, "tau", martingale
    )
    coarse_seq, fine_seq = _streams(seed, 2)
    estimates = list()
    for step, seed_sequence in ((dt, coarse_seq), (dt / 2, fine_seq)):
        values, _, _ = _williams_values(
            n_paths, step, seed_sequence, lower, correction, "tau", n_jobs
        )
        estimates.append(_mean_stderr(values[martingale]))
    (coarse, se1), (fine, se2) = estimates
    report = McReport(
        name="williams-refinement",
        n_paths=n_paths,
        estimate=fine - coarse,
        stderr=math.sqrt(se1**2 + se2**2),
        seed=seed,
        target=0.0,
        dt=dt,
        wide_tolerance=_is_wide(n_paths),
        details={
            "martingale": martingale,
            "coarse": [coarse, se1],
            "fine": [fine, se2],
        },
    )
    logger.info("%r", report)
    return report
