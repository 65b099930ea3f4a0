"""Command-line interface: ``check``, ``fuzz`` and ``mc``."""

import argparse
import sys
from time import perf_counter
from typing import IO, List, Optional

from .. import __version__
from ..io import InstanceFormatError, read_instance, report_record, write_records
from ..lab import CHECKS, MODES, CampaignSummary, iter_campaign, run_suite
from ..montecarlo import (
    cox_uniformity,
    poisson_example,
    williams_refinement_check,
    williams_tau,
)
from ..utils._config import get_config
from ..utils._logs import set_log_level

# exit codes
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def _error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _checks_list(value: str) -> List[str]:
    checks = [check.strip() for check in value.split(",") if check.strip()]
    unknown = [check for check in checks if check not in CHECKS]
    if len(unknown) != 0:
        raise argparse.ArgumentTypeError(
            f"unknown check(s) {', '.join(unknown)}; choose among {', '.join(CHECKS)}"
        )
    return checks


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--verbose",
        nargs="?",
        const="INFO",
        default=None,
        help="log level, 'INFO' if the flag is given without a value",
    )
    common.add_argument(
        "--timing",
        action="store_true",
        help="add wall-clock durations to the records",
    )

    parser = argparse.ArgumentParser(
        prog=__package__.split(".")[0],
        description="Exact checks of pseudo-stopping times and immersion, and Monte "
        "Carlo experiments in continuous time.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    check = subparsers.add_parser(
        "check", parents=[common], help="run the theorem suite on an instance file"
    )
    check.add_argument("file", help="JSON instance file")
    check.add_argument(
        "--checks",
        type=_checks_list,
        default=None,
        help="comma-separated checks, every applicable check by default",
    )
    check.add_argument("--cap", type=int, default=None, help="enumeration cap")
    check.add_argument("--seed", type=int, default=0, help="seed of sampled times")

    fuzz = subparsers.add_parser(
        "fuzz", parents=[common], help="run the theorem suite on generated instances"
    )
    fuzz.add_argument("--trials", type=int, required=True)
    fuzz.add_argument("--seed", type=int, required=True)
    fuzz.add_argument("--omega-max", type=int, default=8)
    fuzz.add_argument("--horizon-max", type=int, default=4)
    fuzz.add_argument("--mode", choices=MODES + ("mixed",), default="free")
    fuzz.add_argument("--cap", type=int, default=None, help="enumeration cap")
    fuzz.add_argument("--n-jobs", type=int, default=None)
    fuzz.add_argument("--max-witnesses", type=int, default=5)

    mc = subparsers.add_parser("mc", help="run a Monte Carlo experiment")
    experiments = mc.add_subparsers(dest="experiment", required=True)
    williams = experiments.add_parser(
        "williams", parents=[common], help="argmax of B before its last zero"
    )
    williams.add_argument("--paths", type=int, default=10000)
    williams.add_argument("--dt", type=float, default=1e-3)
    williams.add_argument("--seed", type=int, default=0)
    williams.add_argument("--lower", type=float, default=1.0)
    williams.add_argument("--no-correction", action="store_true")
    williams.add_argument("--stop-at", choices=("tau", "T1"), default="tau")
    williams.add_argument("--martingale", choices=("B", "B2"), default="B")
    williams.add_argument(
        "--refinement", action="store_true", help="compare the grids dt and dt / 2"
    )
    poisson = experiments.add_parser(
        "poisson", parents=[common], help="midpoint of the first two Poisson jumps"
    )
    poisson.add_argument("--lambda", dest="lam", type=float, default=1.0)
    poisson.add_argument("--paths", type=int, default=10000)
    poisson.add_argument("--seed", type=int, default=0)
    poisson.add_argument("--stop-at", choices=("tau", "T2"), default="tau")
    poisson.add_argument("--inner", type=int, default=10000)
    cox = experiments.add_parser(
        "cox", parents=[common], help="uniformity of Ao at a Cox default time"
    )
    cox.add_argument("--paths", type=int, default=10000)
    cox.add_argument("--seed", type=int, default=0)
    cox.add_argument("--intensity", choices=("unit", "decaying"), default="unit")
    cox.add_argument("--adversarial", action="store_true")
    for experiment in (williams, poisson, cox):
        experiment.add_argument("--n-jobs", type=int, default=None)
    return parser


def _cmd_check(args, out: IO) -> int:
    try:
        instance = read_instance(args.file)
    except InstanceFormatError as error:
        return _error(f"{args.file}: {error}")
    except OSError as error:
        return _error(str(error))

    target = instance.F if instance.pair is None else instance.pair
    names = list(instance.times) if len(instance.times) != 0 else [None]
    records = list()
    status = EXIT_OK
    for name in names:
        tau = None if name is None else instance.times[name]
        start = perf_counter()
        try:
            reports = run_suite(
                target,
                tau,
                cap=args.cap,
                seed=args.seed,
                checks=args.checks,
                processes=dict(instance.processes),
                digest=instance.digest,
            )
        except (TypeError, ValueError) as error:
            return _error(str(error))
        timing = perf_counter() - start if args.timing else None
        extra = dict() if name is None else {"time": name}
        for report in reports:
            records.append(report_record(report, timing, **extra))
            if report.failed or report.witness is not None:
                status = EXIT_FAILED
    write_records(records, out)
    return status


def _cmd_fuzz(args, out: IO) -> int:
    if args.max_witnesses < 1:
        return _error("Argument 'max_witnesses' must be at least 1.")
    start = perf_counter()
    try:
        trials = iter_campaign(
            args.trials,
            args.seed,
            args.omega_max,
            args.horizon_max,
            args.mode,
            args.cap,
            args.n_jobs,
        )
    except (TypeError, ValueError) as error:
        return _error(str(error))

    summary = CampaignSummary(max_witnesses=args.max_witnesses)

    for trial in trials:
        records = (
            report_record(report, trial=trial.index, mode=trial.mode)
            for report in trial.reports
        )
        write_records(records, out)
        summary = summary.merge(
            CampaignSummary.from_trial(
                trial.index, trial.reports, trial.counters, args.max_witnesses
            )
        )
    cap = get_config()["ENUMERATION_CAP"] if args.cap is None else args.cap
    footer = summary.to_dict(
        seed=args.seed,
        parameters={
            "trials": args.trials,
            "omega_max": args.omega_max,
            "horizon_max": args.horizon_max,
            "mode": args.mode,
            "cap": cap,
        },
    )
    if args.timing:
        footer["timing"] = perf_counter() - start
    write_records([footer], out)
    return EXIT_OK if summary.passed else EXIT_FAILED


def _cmd_mc(args, out: IO) -> int:
    start = perf_counter()
    try:
        if args.experiment == "williams":
            kwargs = dict(
                lower=args.lower,
                correction=not args.no_correction,
                martingale=args.martingale,
                n_jobs=args.n_jobs,
            )
            if args.refinement:
                report = williams_refinement_check(
                    args.paths, args.dt, args.seed, **kwargs
                )
            else:
                report = williams_tau(
                    args.paths, args.dt, args.seed, stop_at=args.stop_at, **kwargs
                )
        elif args.experiment == "poisson":
            report = poisson_example(
                args.lam,
                args.paths,
                args.seed,
                stop_at=args.stop_at,
                n_inner=args.inner,
                n_jobs=args.n_jobs,
            )
        else:
            report = cox_uniformity(
                args.paths,
                args.seed,
                intensity=args.intensity,
                adversarial=args.adversarial,
                n_jobs=args.n_jobs,
            )
    except (TypeError, ValueError) as error:
        return _error(str(error))
    timing = perf_counter() - start if args.timing else None
    write_records([report_record(report, timing)], out)
    return EXIT_OK if report.passed else EXIT_FAILED


def main(argv: Optional[List[str]] = None, out: Optional[IO] = None) -> int:
    """Parse the arguments, run the command and return its exit code.

    Parameters
    ----------
    argv : list of str | None
        Command-line arguments. If None, ``sys.argv[1:]`` is used.
    out : file-like | None
        Stream receiving the records. If None, ``sys.stdout`` is used.

    Returns
    -------
    code : int
        0 if every check passes, 1 if a counterexample or a failed experiment is
        reported, 2 on invalid input.
    """
    args = _parser().parse_args(argv)
    out = sys.stdout if out is None else out
    try:
        set_log_level(args.verbose)
    except ValueError as error:
        return _error(str(error))
    commands = {"check": _cmd_check, "fuzz": _cmd_fuzz, "mc": _cmd_mc}
    return commands[args.command](args, out)


def run():
    """Run the ``pyfiltrations`` command."""
    sys.exit(main())
