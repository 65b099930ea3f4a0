"""Theorem suite on a single instance and fuzz campaigns over generated instances."""

from contextlib import nullcontext
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Union

import numpy as np
from joblib import Parallel, delayed

from .._report import CheckReport
from .._typing import Process
from ..projections.azema import azema_bundle
from ..projections.hloc import hloc_check
from ..space.digest import instance_digest
from ..space.expectation import _check_process
from ..space.filtration import FilteredPair, Filtration
from ..space.stopping import _check_time, is_stopping_time
from ..space.times import RandomTime
from ..utils._checks import (
    _check_n_jobs,
    _check_seed,
    _check_type,
    _check_value,
    _ensure_int,
)
from ..utils._config import get_config
from ..utils._docs import fill_doc
from ..utils._logs import _use_log_level, logger, verbose
from .barrier import barrier_representation_check, decompose_check, gstoping_d_check
from .enumeration import _check_cap
from .generator import (
    MODES,
    GeneratorParams,
    gen_random_instance,
    random_increasing_process,
)
from .honest import honest_immersion_check, honest_pseudo_check
from .immersion import immersion_cond_indep, is_immersed, pseudoH_check
from .pseudo import is_pseudo_stopping, ny2_check
from .report import CampaignSummary

CHECKS = (
    "ny2",
    "hloc",
    "pseudoH",
    "honest",
    "barrier",
    "gstoping-d",
    "corollary",
    "immersion-oracles",
    "pseudo-oracles",
    "decompose",
)
_NEEDS_PAIR = ("pseudoH", "gstoping-d", "corollary", "immersion-oracles", "decompose")
_NEEDS_TIME = (
    "ny2",
    "honest",
    "barrier",
    "gstoping-d",
    "corollary",
    "pseudo-oracles",
    "decompose",
)


class _Instance(NamedTuple):
    F: Filtration
    pair: Optional[FilteredPair]
    tau: Optional[RandomTime]
    processes: Dict[str, Process]
    digest: str


def _is_nondecreasing(V: Process) -> bool:
    return bool(np.all(V[1:] >= V[:-1]))


def _missing(check: str, instance: _Instance) -> Optional[str]:
    """Reason why a check can not run on the instance, or None."""
    if check in _NEEDS_PAIR and instance.pair is None:
        return "a filtered pair"
    if check in _NEEDS_TIME and instance.tau is None:
        return "a random time"
    if check == "hloc" and instance.tau is None and len(instance.processes) == 0:
        return "a random time or a process"
    if check in ("gstoping-d", "decompose") and not is_stopping_time(
        instance.tau, instance.pair.G
    ):
        return "a stopping time of 'G'"
    if check == "gstoping-d" and not is_immersed(instance.pair):
        return "'F' immersed in 'G'"
    return None


def _oracle_report(name: str, conditions, digest: str) -> CheckReport:
    return CheckReport(name=name, conditions=tuple(conditions), instance_digest=digest)


def _run_check(
    check: str, instance: _Instance, cap: int, seed: int
) -> List[CheckReport]:
    F, pair, tau, digest = instance.F, instance.pair, instance.tau, instance.digest
    if check == "ny2":
        return [ny2_check(tau, F, digest)]
    if check == "hloc":
        processes = dict()
        if tau is not None:
            processes["A"] = azema_bundle(tau, F).A
        for name, V in instance.processes.items():
            if _is_nondecreasing(V):
                processes[name] = V
            else:
                logger.debug("hloc skipped on '%s', its paths decrease.", name)
        reports = list()
        for name, V in processes.items():
            report = hloc_check(V, F, digest)
            reports.append(
                CheckReport(
                    name=f"hloc[{name}]",
                    conditions=report.conditions,
                    instance_digest=digest,
                    witness=report.witness,
                )
            )
        return reports
    if check == "pseudoH":
        return [pseudoH_check(pair, cap, seed=seed, digest=digest)]
    if check == "honest":
        return [honest_pseudo_check(tau, F, cap, digest)]
    if check == "barrier":
        holds, witness = barrier_representation_check(tau, F, return_witness=True)
        return [
            CheckReport(
                name="barrier",
                instance_digest=digest,
                witness=witness,
                assertions=(("first-passage", holds),),
            )
        ]
    if check == "gstoping-d":
        return [gstoping_d_check(tau, pair, digest)]
    if check == "corollary":
        holds, witness = honest_immersion_check(tau, pair, return_witness=True)
        return [
            CheckReport(
                name="corollary",
                instance_digest=digest,
                witness=witness,
                assertions=(("honest-immersion", holds),),
            )
        ]
    if check == "immersion-oracles":
        conditions = (
            ("martingales", is_immersed(pair)),
            ("conditional-independence", immersion_cond_indep(pair)),
        )
        return [_oracle_report("immersion-oracles", conditions, digest)]
    if check == "pseudo-oracles":
        m = azema_bundle(tau, F).m
        conditions = (
            ("definition", is_pseudo_stopping(tau, F)),
            ("m-one", bool(np.all(m == 1))),
        )
        return [_oracle_report("pseudo-oracles", conditions, digest)]
    return [decompose_check(tau, pair, digest)]


def _as_instance(pair_or_F, tau, processes, digest) -> _Instance:
    _check_type(pair_or_F, (FilteredPair, Filtration), "pair_or_F")
    if isinstance(pair_or_F, FilteredPair):
        pair, F = pair_or_F, pair_or_F.F
        filtrations = {"F": pair.F, "G": pair.G}
    else:
        pair, F = None, pair_or_F
        filtrations = {"F": F}
    _check_type(tau, (RandomTime, None), "tau")
    if tau is not None:
        _check_time(tau, F)
    _check_type(processes, (dict, None), "processes")
    processes = {
        name: _check_process(V, F, name) for name, V in (processes or dict()).items()
    }
    if digest is None:
        times = None if tau is None else {"tau": tau}
        digest = instance_digest(F.space, filtrations, times, processes)
    return _Instance(F, pair, tau, processes, digest)


@fill_doc
@verbose
def run_suite(
    pair_or_F: Union[FilteredPair, Filtration],
    tau: Optional[RandomTime] = None,
    *,
    cap: Optional[int] = None,
    seed: int = 0,
    checks: Optional[Sequence[str]] = None,
    processes: Optional[Mapping[str, Process]] = None,
    digest: Optional[str] = None,
    verbose=None,
) -> List[CheckReport]:
    """Run the theorem checks on an instance.

    Parameters
    ----------
    pair_or_F : FilteredPair | Filtration
        Filtrations of the instance. The checks involving ``G`` need a pair.
    tau : RandomTime | None
        Random time of the instance.
    %(cap)s
        If None, the ``ENUMERATION_CAP`` configuration value is used.
    %(seed)s
    checks : list of str | None
        Checks to run among ``'ny2'``, ``'hloc'``, ``'pseudoH'``, ``'honest'``,
        ``'barrier'``, ``'gstoping-d'``, ``'corollary'``, ``'immersion-oracles'``,
        ``'pseudo-oracles'`` and ``'decompose'``. If None, every check applicable
        to the instance runs and the others are skipped.
    processes : dict | None
        Named processes of shape ``(T + 1, n)`` on which ``hloc`` runs in addition
        to ``A_t = 1{tau <= t}``. Processes with decreasing paths are skipped.
    digest : str | None
        Digest of the instance. If None, the digest of the arguments is used.
    %(verbose)s

    Returns
    -------
    reports : list of CheckReport
        One report per check, ``hloc`` giving one report per process.

    Raises
    ------
    ValueError
        If an explicitly requested check does not apply to the instance, e.g.
        ``'gstoping-d'`` without immersion.
    """
    instance = _as_instance(pair_or_F, tau, processes, digest)
    cap = get_config()["ENUMERATION_CAP"] if cap is None else cap
    cap = _check_cap(cap)
    seed = _check_seed(seed)
    if checks is None:
        selected = list()
        for check in CHECKS:
            reason = _missing(check, instance)
            if reason is None:
                selected.append(check)
            else:
                logger.debug("Check '%s' skipped, it requires %s.", check, reason)
    else:
        _check_type(checks, (list, tuple), "checks")
        for check in checks:
            _check_value(check, CHECKS, "checks")
            reason = _missing(check, instance)
            if reason is not None:
                raise ValueError(f"Check '{check}' requires {reason}.")
        selected = list(checks)

    reports = list()
    for check in selected:
        reports.extend(_run_check(check, instance, cap, seed))
    failed = [report.name for report in reports if report.failed]
    logger.info(
        "%i reports on instance %s, %i failed %s",
        len(reports),
        instance.digest[:12],
        len(failed),
        failed,
    )
    return reports


class Trial(NamedTuple):
    """Reports of the theorem suite on one generated instance.

    Parameters
    ----------
    index : int
        Index of the instance in the campaign.
    seed : int
        Seed of the instance, ``seed ^ index``.
    mode : str
        Generator mode of the instance.
    reports : list of CheckReport
        Reports of the suite.
    counters : dict
        Named counts contributed by the instance.
    """

    index: int
    seed: int
    mode: str
    reports: List[CheckReport]
    counters: Dict[str, int]


def _z_monotone_not_pseudo(tau: RandomTime, F: Filtration) -> bool:
    Z = azema_bundle(tau, F).Z
    return bool(np.all(Z[1:] <= Z[:-1])) and not is_pseudo_stopping(tau, F)


def _run_trial(
    index: int,
    seed: int,
    omega_max: int,
    horizon_max: int,
    mode: str,
    cap: int,
) -> Trial:
    """Generate the instance of a campaign index and run the suite on it."""
    instance_seed = seed ^ index
    if mode == "mixed":
        mode = MODES[index % len(MODES)]
    params = GeneratorParams(omega_max, horizon_max, mode, instance_seed)
    pair, tau = gen_random_instance(params)
    # raw process, not adapted to any filtration
    rng = np.random.default_rng([instance_seed, 1])
    V = random_increasing_process(pair.G, rng, adapted=False)
    reports = run_suite(pair, tau, cap=cap, seed=instance_seed, processes={"V": V})
    counters = {
        "immersed": int(is_immersed(pair)),
        "monotone_z_not_pseudo": int(_z_monotone_not_pseudo(tau, pair.F)),
        "pseudoH_fallback": int(
            any(
                r.details.get("fallback", False)
                for r in reports
                if r.name == "pseudoH"
            )
        ),
    }
    return Trial(index, instance_seed, mode, reports, counters)


def _check_campaign(trials, seed, omega_max, horizon_max, mode, cap, n_jobs):
    trials = _check_positive_int(trials, "trials")
    seed = _check_seed(seed)
    _check_type(mode, (str,), "mode")
    _check_value(mode, MODES + ("mixed",), "mode")
    # validates the sizes before any worker starts
    GeneratorParams(omega_max, horizon_max, MODES[0], seed)
    cap = get_config()["ENUMERATION_CAP"] if cap is None else cap
    cap = _check_cap(cap)
    n_jobs = get_config()["N_JOBS"] if n_jobs is None else n_jobs
    n_jobs = _check_n_jobs(n_jobs)
    return trials, seed, cap, n_jobs


def _check_positive_int(item, item_name: str) -> int:
    item = _ensure_int(item, item_name)
    if item < 1:
        raise ValueError(
            f"Argument '{item_name}' must be a strictly positive integer. "
            f"Provided: '{item}'."
        )
    return item


@fill_doc
@verbose
def iter_campaign(
    trials: int,
    seed: int = 0,
    omega_max: int = 8,
    horizon_max: int = 4,
    mode: str = "free",
    cap: Optional[int] = None,
    n_jobs: Optional[int] = None,
    *,
    verbose=None,
) -> Iterator[Trial]:
    """Run the theorem suite on generated instances, yielding them in index order.

    Parameters
    ----------
    trials : int
        Number of generated instances.
    %(seed)s
        Instance ``i`` is generated with the seed ``seed ^ i``.
    omega_max : int
        Maximum number of outcomes.
    horizon_max : int
        Maximum horizon.
    mode : str
        Generator mode, see `~pyfiltrations.lab.GeneratorParams`, or ``'mixed'`` to
        cycle through the modes with the instance index.
    %(cap)s
        If None, the ``ENUMERATION_CAP`` configuration value is used.
    %(n_jobs)s
        If None, the ``N_JOBS`` configuration value is used.
    %(verbose)s

    Yields
    ------
    trial : Trial
        Reports and counters of one instance. The sequence does not depend on
        ``n_jobs``.
    """
    trials, seed, cap, n_jobs = _check_campaign(
        trials, seed, omega_max, horizon_max, mode, cap, n_jobs
    )
    logger.info(
        "Campaign of %i trials in mode '%s' (seed %i, %i job(s)).",
        trials,
        mode,
        seed,
        n_jobs,
    )
    arguments = (seed, omega_max, horizon_max, mode, cap)
    return _iter_trials(trials, arguments, n_jobs, verbose)


def _iter_trials(trials, arguments, n_jobs, verbose) -> Iterator[Trial]:
    # the log level must also hold while the caller iterates
    with _use_log_level(verbose) if verbose is not None else nullcontext():
        if n_jobs == 1:
            for index in range(trials):
                yield _run_trial(index, *arguments)
            return
        parallel = Parallel(n_jobs=n_jobs, return_as="generator")
        yield from parallel(
            delayed(_run_trial)(index, *arguments) for index in range(trials)
        )


@fill_doc
@verbose
def fuzz_campaign(
    trials: int,
    seed: int = 0,
    omega_max: int = 8,
    horizon_max: int = 4,
    mode: str = "free",
    cap: Optional[int] = None,
    n_jobs: Optional[int] = None,
    max_witnesses: int = 5,
    *,
    verbose=None,
) -> CampaignSummary:
    """Run the theorem suite on generated instances and summarize the failures.

    Parameters
    ----------
    trials : int
        Number of generated instances.
    %(seed)s
    omega_max : int
        Maximum number of outcomes.
    horizon_max : int
        Maximum horizon.
    mode : str
        Generator mode, or ``'mixed'``.
    %(cap)s
        If None, the ``ENUMERATION_CAP`` configuration value is used.
    %(n_jobs)s
        If None, the ``N_JOBS`` configuration value is used.
    max_witnesses : int
        Number of failing reports kept in the summary.
    %(verbose)s

    Returns
    -------
    summary : CampaignSummary
        Counts of trials and failures, the counters ``immersed``,
        ``monotone_z_not_pseudo`` and ``pseudoH_fallback``, and the first failing
        reports.
    """
    max_witnesses = _check_positive_int(max_witnesses, "max_witnesses")
    summary = CampaignSummary(max_witnesses=max_witnesses)
    for trial in iter_campaign(
        trials, seed, omega_max, horizon_max, mode, cap, n_jobs
    ):
        summary = summary.merge(
            CampaignSummary.from_trial(
                trial.index, trial.reports, trial.counters, max_witnesses
            )
        )
    logger.info("%i failing reports over %i trials.", summary.failures, summary.trials)
    return summary
