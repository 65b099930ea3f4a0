"""Monte Carlo experiments in continuous time."""

from .cox import cox_uniformity
from .poisson import poisson_example
from .report import McReport
from .williams import williams_refinement_check, williams_tau

__all__ = (
    "cox_uniformity",
    "poisson_example",
    "McReport",
    "williams_refinement_check",
    "williams_tau",
)
