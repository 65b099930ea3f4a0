"""Structured verdicts of the exact checks."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Optional, Tuple

import numpy as np

from .space.process import format_rational
from .space.times import INF


def _serialize(value: Any) -> Any:
    """Convert exact values to their JSON representation."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (np.generic, np.ndarray)):
        return _serialize(value.tolist())
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float) and value == INF:
        return "inf"
    if isinstance(value, Mapping):
        return {str(key): _serialize(val) for key, val in value.items()}
    if isinstance(value, (list, tuple)):
        return [_serialize(val) for val in value]
    return value


@dataclass(frozen=True)
class Witness:
    """Counterexample attached to a check.

    Parameters
    ----------
    condition : str
        Label of the condition the counterexample refers to.
    t : int | None
        Time index of the counterexample.
    outcome : int | None
        Outcome index of the counterexample.
    values : tuple of Fraction
        Offending exact values, e.g. the two sides of a failing identity.
    block : tuple of int | None
        Block of outcomes involved, e.g. the block of a basis martingale.
    tau : tuple | None
        Random time involved, e.g. a stopping time which is not pseudo-stopping.
    """

    condition: str
    t: Optional[int] = None
    outcome: Optional[int] = None
    values: Tuple[Fraction, ...] = ()
    block: Optional[Tuple[int, ...]] = None
    tau: Optional[Tuple] = None

    def to_dict(self) -> dict:
        """Serializable representation, rationals written ``'p/q'``."""
        out = {"condition": self.condition, "values": _serialize(self.values)}
        for key in ("t", "outcome", "block", "tau"):
            value = getattr(self, key)
            if value is not None:
                out[key] = _serialize(value)
        return out


@dataclass(frozen=True)
class CheckReport:
    """Verdict of a theorem check.

    Parameters
    ----------
    name : str
        Name of the check, e.g. ``'ny2'``.
    conditions : tuple of (str, bool)
        Independently evaluated conditions which the theorem claims equivalent.
    instance_digest : str
        Digest of the instance the check ran on.
    witness : Witness | None
        First disagreeing coordinate, or first counterexample of the property.
    assertions : tuple of (str, bool)
        Additional claims which must hold, e.g. an identity or a consequence of the
        equivalence.
    details : dict
        Informational values, e.g. the number of enumerated stopping times.
    """

    name: str
    conditions: Tuple[Tuple[str, bool], ...] = ()
    instance_digest: str = ""
    witness: Optional[Witness] = None
    assertions: Tuple[Tuple[str, bool], ...] = ()
    details: Mapping[str, Any] = field(default_factory=dict)

    def __repr__(self) -> str:
        verdicts = ", ".join(f"{label}={value}" for label, value in self.conditions)
        s = f"<CheckReport '{self.name}' | agree = {self.agree}"
        if len(verdicts) != 0:
            s += f" | {verdicts}"
        return s + ">"

    def _repr_html_(self, caption=None):
        from .html_templates import repr_templates_env

        template = repr_templates_env.get_template("CheckReport.html.jinja")
        return template.render(
            name=self.name,
            conditions=self.conditions,
            assertions=self.assertions,
            agree=self.agree,
            sound=self.sound,
            witness=None if self.witness is None else self.witness.to_dict(),
            instance_digest=self.instance_digest,
            caption=caption,
        )

    def to_dict(self) -> dict:
        """Serializable representation of the report."""
        out = {
            "check": self.name,
            "instance_digest": self.instance_digest,
            "agree": bool(self.agree),
            "sound": bool(self.sound),
            "failed": bool(self.failed),
            "conditions": {label: bool(value) for label, value in self.conditions},
        }
        if len(self.assertions) != 0:
            out["assertions"] = {
                label: bool(value) for label, value in self.assertions
            }
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if len(self.details) != 0:
            out["details"] = _serialize(self.details)
        return out

    @property
    def agree(self) -> bool:
        """True if all condition verdicts are equal.

        :type: `bool`
        """
        return len({value for _, value in self.conditions}) <= 1

    @property
    def holds(self) -> bool:
        """True if every condition holds.

        :type: `bool`
        """
        return all(value for _, value in self.conditions)

    @property
    def sound(self) -> bool:
        """True if every additional assertion holds.

        :type: `bool`
        """
        return all(value for _, value in self.assertions)

    @property
    def failed(self) -> bool:
        """True if the check contradicts the theorem it renders.

        :type: `bool`
        """
        return not (self.agree and self.sound)
