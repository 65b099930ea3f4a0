"""Exact checks of the theorems on pseudo-stopping times and immersion."""

from .barrier import (
    StoppingTimeDecomposition,
    barrier_representation_check,
    decompose_check,
    decompose_stopping_time,
    gstoping_d_check,
)
from .enumeration import (
    StoppingTimeEnumerationError,
    count_stopping_times,
    enumerate_stopping_times,
    sample_stopping_time,
    two_valued_stopping_times,
)
from .generator import (
    MODES,
    GeneratorParams,
    gen_random_instance,
    random_increasing_process,
)
from .honest import honest_immersion_check, honest_pseudo_check
from .immersion import immersion_cond_indep, is_immersed, pseudoH_check
from .pseudo import is_pseudo_stopping, ny2_check
from .report import CampaignSummary, CheckReport, Witness
from .suite import CHECKS, Trial, fuzz_campaign, iter_campaign, run_suite

__all__ = (
    "StoppingTimeDecomposition",
    "barrier_representation_check",
    "decompose_check",
    "decompose_stopping_time",
    "gstoping_d_check",
    "StoppingTimeEnumerationError",
    "count_stopping_times",
    "enumerate_stopping_times",
    "sample_stopping_time",
    "two_valued_stopping_times",
    "MODES",
    "GeneratorParams",
    "gen_random_instance",
    "random_increasing_process",
    "honest_immersion_check",
    "honest_pseudo_check",
    "immersion_cond_indep",
    "is_immersed",
    "pseudoH_check",
    "is_pseudo_stopping",
    "ny2_check",
    "CampaignSummary",
    "CheckReport",
    "Witness",
    "CHECKS",
    "Trial",
    "fuzz_campaign",
    "iter_campaign",
    "run_suite",
)
