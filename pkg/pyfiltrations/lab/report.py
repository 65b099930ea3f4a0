"""Check reports and fuzz-campaign summaries."""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Sequence, Tuple

from .._report import CheckReport, Witness, _serialize
from ..utils._checks import _check_type

__all__ = ("CheckReport", "Witness", "CampaignSummary")


def _witness_key(item):
    index, record = item
    return index, json.dumps(record, sort_keys=True)


@dataclass(frozen=True)
class CampaignSummary:
    """Aggregated outcome of a fuzz campaign.

    Summaries merge with `~CampaignSummary.merge`, an associative and commutative
    operation, so the final summary does not depend on the order in which the
    instances were evaluated.

    Parameters
    ----------
    trials : int
        Number of instances.
    failures : int
        Number of reports contradicting a theorem.
    counters : dict
        Named counts, e.g. the number of immersed instances.
    witnesses : tuple of (int, dict)
        Serialized failing reports with the index of their instance, sorted by
        index and truncated to ``max_witnesses``.
    max_witnesses : int
        Number of failing reports kept.
    """

    trials: int = 0
    failures: int = 0
    counters: Mapping[str, int] = field(default_factory=dict)
    witnesses: Tuple[Tuple[int, dict], ...] = ()
    max_witnesses: int = 5

    @classmethod
    def from_trial(
        cls,
        index: int,
        reports: Sequence[CheckReport],
        counters: Mapping[str, int] = None,
        max_witnesses: int = 5,
    ) -> "CampaignSummary":
        """Summary of a single instance.

        Parameters
        ----------
        index : int
            Index of the instance in the campaign.
        reports : list of CheckReport
            Reports of the theorem suite on the instance.
        counters : dict | None
            Named counts contributed by the instance.
        max_witnesses : int
            Number of failing reports kept.

        Returns
        -------
        summary : CampaignSummary
        """
        failed = [report for report in reports if report.failed]
        witnesses = sorted(
            ((index, report.to_dict()) for report in failed), key=_witness_key
        )
        return cls(
            trials=1,
            failures=len(failed),
            counters=dict(counters or dict()),
            witnesses=tuple(witnesses[:max_witnesses]),
            max_witnesses=max_witnesses,
        )

    def merge(self, other: "CampaignSummary") -> "CampaignSummary":
        """Combine two summaries of disjoint sets of instances."""
        _check_type(other, (CampaignSummary,), "other")
        counters: Dict[str, int] = dict(self.counters)
        for key, value in other.counters.items():
            counters[key] = counters.get(key, 0) + value
        max_witnesses = min(self.max_witnesses, other.max_witnesses)
        witnesses = sorted(self.witnesses + other.witnesses, key=_witness_key)
        return CampaignSummary(
            trials=self.trials + other.trials,
            failures=self.failures + other.failures,
            counters=dict(sorted(counters.items())),
            witnesses=tuple(witnesses[:max_witnesses]),
            max_witnesses=max_witnesses,
        )

    def __repr__(self) -> str:
        return (
            f"<CampaignSummary | {self.trials} trials | {self.failures} failures>"
        )

    def to_dict(self, **parameters: Any) -> dict:
        """Campaign footer record.

        Parameters
        ----------
        **parameters
            Campaign parameters written along the counts, e.g. the seed.

        Returns
        -------
        footer : dict
        """
        out = {
            "trials": self.trials,
            "failures": self.failures,
            "counters": dict(self.counters),
            "witnesses": [
                {"index": index, "report": record} for index, record in self.witnesses
            ],
        }
        out.update(_serialize(parameters))
        return out

    @property
    def passed(self) -> bool:
        """True if no instance contradicts a theorem.

        :type: `bool`
        """
        return self.failures == 0
