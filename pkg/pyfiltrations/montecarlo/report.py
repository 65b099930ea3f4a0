"""Report of a Monte Carlo experiment."""

import math
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional

# number of standard errors accepted around the target
N_SIGMA = 3
N_SIGMA_WIDE = 5
# paths below which the tolerance is widened
WIDE_TOLERANCE_PATHS = 100
# 1% asymptotic critical value of the one-sample KS statistic, times sqrt(n)
KS_CRITICAL = 1.63


@dataclass(frozen=True)
class McReport:
    """Estimate of a Monte Carlo experiment.

    Parameters
    ----------
    name : str
        Name of the experiment, e.g. ``'williams'``.
    n_paths : int
        Number of simulated paths.
    estimate : float
        Sample mean of the estimated quantity.
    stderr : float
        Standard error of the estimate, 0 with a single path.
    seed : int
        Seed of the experiment.
    target : float | None
        Exact value of the estimated quantity, if known.
    ks_statistic : float | None
        One-sample Kolmogorov-Smirnov statistic, for distribution checks.
    dt : float | None
        Step of the simulation grid, for path simulations.
    wide_tolerance : bool
        True if the sample is too small for the asymptotic tolerances, in which
        case they are widened.
    details : dict
        Secondary estimates and parameters of the experiment.
    """

    name: str
    n_paths: int
    estimate: float
    stderr: float
    seed: int
    target: Optional[float] = None
    ks_statistic: Optional[float] = None
    dt: Optional[float] = None
    wide_tolerance: bool = False
    details: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.n_paths < 1:
            raise ValueError("A report needs at least one path.")
        if self.stderr < 0:
            raise ValueError("The standard error can not be negative.")

    def __repr__(self) -> str:
        s = f"<McReport '{self.name}' | {self.n_paths} paths"
        s += f" | estimate = {self.estimate:.4f} ± {self.stderr:.4f}"
        if self.target is not None:
            s += f" | target = {self.target}"
        if self.ks_statistic is not None:
            s += f" | KS = {self.ks_statistic:.4f}"
        return s + ">"

    def _repr_html_(self, caption=None):
        from ..html_templates import repr_templates_env

        template = repr_templates_env.get_template("McReport.html.jinja")
        return template.render(
            name=self.name,
            n_paths=self.n_paths,
            estimate=self.estimate,
            stderr=self.stderr,
            target=self.target,
            ks_statistic=self.ks_statistic,
            dt=self.dt,
            seed=self.seed,
            wide_tolerance=self.wide_tolerance,
            passed=self.passed,
            caption=caption,
        )

    def to_dict(self) -> dict:
        """Serializable representation of the report."""
        out = {
            "experiment": self.name,
            "n_paths": self.n_paths,
            "estimate": self.estimate,
            "stderr": self.stderr,
            "seed": self.seed,
            "target": self.target,
            "ks_statistic": self.ks_statistic,
            "ks_threshold": self.ks_threshold,
            "dt": self.dt,
            "tolerance": self.tolerance,
            "wide_tolerance": self.wide_tolerance,
            "passed": self.passed,
        }
        if len(self.details) != 0:
            out["details"] = dict(self.details)
        return out

    @property
    def tolerance(self) -> Optional[float]:
        """Accepted distance between the estimate and the target.

        :type: `float` | None
        """
        if self.target is None:
            return None
        n_sigma = N_SIGMA_WIDE if self.wide_tolerance else N_SIGMA
        return n_sigma * self.stderr

    @property
    def ks_threshold(self) -> Optional[float]:
        """Critical value of the KS statistic at the 1% level.

        :type: `float` | None
        """
        if self.ks_statistic is None:
            return None
        return KS_CRITICAL / math.sqrt(self.n_paths)

    @property
    def passed(self) -> bool:
        """True if the experiment reproduces the expected behavior.

        The KS statistic must be below its threshold; otherwise the estimate must
        be within tolerance of the target. Secondary checks listed in the details
        must also pass.

        :type: `bool`
        """
        if self.ks_statistic is not None:
            if self.wide_tolerance:
                passed = 0.01 < self.details.get("ks_pvalue", 1.0)
            else:
                passed = self.ks_statistic < self.ks_threshold
        elif self.target is not None:
            passed = abs(self.estimate - self.target) <= self.tolerance
        else:
            passed = True
        return passed and self.details.get("subchecks_passed", True)
