"""Instance files: a sample space, named filtrations, times and processes."""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Mapping, Optional, Union

from .._typing import Process
from ..space.digest import canonical_payload, instance_digest
from ..space.filtration import FilteredPair, Filtration
from ..space.partition import Partition, refines
from ..space.process import _as_fraction, as_process
from ..space.space import SampleSpace
from ..space.times import INF, RandomTime, _as_time_value
from ..utils._checks import _check_type
from ..utils._logs import logger

_REQUIRED = ("omega", "probs", "horizon", "filtrations")
_OPTIONAL = ("times", "processes")


class InstanceFormatError(ValueError):
    """Invalid instance document.

    Parameters
    ----------
    message : str
        Description of the problem.
    location : str
        Path of the offending entry, e.g. ``'probs/2'``.
    """

    def __init__(self, message: str, location: str = ""):
        self.location = location
        prefix = f"[{location}] " if location else ""
        super().__init__(prefix + message)


@dataclass(frozen=True, eq=False)
class Instance:
    """Content of an instance file.

    Parameters
    ----------
    space : SampleSpace
        Finite sample space.
    filtrations : dict of Filtration
        Named filtrations. ``'F'`` is required; ``'G'``, if present, must refine it.
    times : dict of RandomTime
        Named random times.
    processes : dict of array
        Named processes of shape ``(T + 1, n)`` holding fractions.
    """

    space: SampleSpace
    filtrations: Mapping[str, Filtration]
    times: Mapping[str, RandomTime] = field(default_factory=dict)
    processes: Mapping[str, Process] = field(default_factory=dict)

    @classmethod
    def from_pair(
        cls,
        pair_or_F: Union[FilteredPair, Filtration],
        times: Optional[Mapping[str, RandomTime]] = None,
        processes: Optional[Mapping[str, Process]] = None,
    ) -> "Instance":
        """Build an instance from a pair or from a single filtration ``F``."""
        _check_type(pair_or_F, (FilteredPair, Filtration), "pair_or_F")
        if isinstance(pair_or_F, FilteredPair):
            filtrations = {"F": pair_or_F.F, "G": pair_or_F.G}
        else:
            filtrations = {"F": pair_or_F}
        return cls(
            pair_or_F.space, filtrations, dict(times or {}), dict(processes or {})
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        names = ", ".join(self.filtrations)
        return (
            f"<Instance | n = {self.space.n} | T = {self.horizon} | "
            f"filtrations: {names} | {len(self.times)} time(s)>"
        )

    def to_dict(self) -> dict:
        """Document of the instance, rationals written ``'p/q'``."""
        return canonical_payload(
            self.space, self.filtrations, self.times, self.processes
        )

    @property
    def horizon(self) -> int:
        """Horizon ``T`` shared by the filtrations.

        :type: `int`
        """
        return self.filtrations["F"].horizon

    @property
    def F(self) -> Filtration:
        """Filtration named ``'F'``.

        :type: `~pyfiltrations.space.Filtration`
        """
        return self.filtrations["F"]

    @property
    def pair(self) -> Optional[FilteredPair]:
        """Pair ``(F, G)``, or None if the instance has no filtration ``'G'``.

        :type: `~pyfiltrations.space.FilteredPair` | None
        """
        if "G" not in self.filtrations:
            return None
        return FilteredPair(self.space, self.filtrations["F"], self.filtrations["G"])

    @property
    def digest(self) -> str:
        """SHA-256 digest of the canonical document.

        :type: `str`
        """
        return instance_digest(self.space, self.filtrations, self.times, self.processes)


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_space(document: Mapping) -> SampleSpace:
    n = document["omega"]
    if not _is_int(n) or n < 1:
        raise InstanceFormatError(
            f"'omega' must be a strictly positive integer, got {n!r}.", "omega"
        )
    probs = document["probs"]
    if not isinstance(probs, list) or len(probs) != n:
        raise InstanceFormatError(f"'probs' must be a list of {n} rationals.", "probs")
    for k, p in enumerate(probs):
        if not isinstance(p, str) and not _is_int(p):
            raise InstanceFormatError(
                f"Probabilities must be written 'p/q', got {p!r}.", f"probs/{k}"
            )
        try:
            value = _as_fraction(p, "probs")
        except ValueError as error:
            raise InstanceFormatError(str(error), f"probs/{k}") from error
        if value <= 0:
            raise InstanceFormatError(
                f"Probabilities must be strictly positive, got {p!r}.", f"probs/{k}"
            )
    try:
        return SampleSpace(probs)
    except ValueError as error:
        raise InstanceFormatError(str(error), "probs") from error


def _parse_filtration(
    name: str, parts, space: SampleSpace, horizon: int
) -> Filtration:
    location = f"filtrations/{name}"
    if not isinstance(parts, list) or len(parts) != horizon + 1:
        raise InstanceFormatError(
            f"A filtration must be a list of T + 1 = {horizon + 1} partitions.",
            location,
        )
    partitions: List[Partition] = list()
    for t, blocks in enumerate(parts):
        if not isinstance(blocks, list) or not all(
            isinstance(block, list) and all(_is_int(k) for k in block)
            for block in blocks
        ):
            raise InstanceFormatError(
                "A partition must be a list of lists of outcome indices.",
                f"{location}/{t}",
            )
        try:
            partitions.append(Partition(blocks, n=space.n))
        except ValueError as error:
            raise InstanceFormatError(str(error), f"{location}/{t}") from error
        if 0 < t and not refines(partitions[t], partitions[t - 1]):
            raise InstanceFormatError(
                f"The partition at t={t} does not refine the partition at t={t - 1}.",
                f"{location}/{t}",
            )
    return Filtration(partitions, space)


def _parse_time(name: str, values, n: int, horizon: int) -> RandomTime:
    location = f"times/{name}"
    if not isinstance(values, list) or len(values) != n:
        raise InstanceFormatError(
            f"A random time must be a list of {n} values.", location
        )
    for k, value in enumerate(values):
        if not _is_int(value) and not isinstance(value, str):
            raise InstanceFormatError(
                f"Time values must be integers or 'inf', got {value!r}.",
                f"{location}/{k}",
            )
        try:
            value = _as_time_value(value)
        except ValueError as error:
            raise InstanceFormatError(str(error), f"{location}/{k}") from error
        if value != INF and horizon < value:
            raise InstanceFormatError(
                f"Time value {value} is beyond the horizon T={horizon}.",
                f"{location}/{k}",
            )
    return RandomTime(values)


def _parse_process(name: str, rows, n: int, horizon: int) -> Process:
    location = f"processes/{name}"
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise InstanceFormatError(
            "A process must be a list of T + 1 rows of n rationals.", location
        )
    for t, row in enumerate(rows):
        for k, value in enumerate(row):
            if not isinstance(value, str) and not _is_int(value):
                raise InstanceFormatError(
                    f"Process values must be written 'p/q', got {value!r}.",
                    f"{location}/{t}/{k}",
                )
    try:
        return as_process(rows, horizon, n, name)
    except (TypeError, ValueError) as error:
        raise InstanceFormatError(str(error), location) from error


def _check_names(mapping, location: str) -> None:
    if not isinstance(mapping, dict):
        raise InstanceFormatError("Expected a mapping of names.", location)
    for name in mapping:
        if len(name) == 0:
            raise InstanceFormatError("Names can not be empty.", location)


def parse_instance(document: Mapping) -> Instance:
    """Parse an instance document.

    Parameters
    ----------
    document : dict
        Decoded JSON document with the keys ``'omega'``, ``'probs'``, ``'horizon'``,
        ``'filtrations'`` and optionally ``'times'`` and ``'processes'``.

    Returns
    -------
    instance : Instance

    Raises
    ------
    InstanceFormatError
        If the document is invalid, with the location of the offending entry.
    """
    if not isinstance(document, dict):
        raise InstanceFormatError("An instance must be a JSON object.")
    for key in _REQUIRED:
        if key not in document:
            raise InstanceFormatError(f"Missing key '{key}'.", key)
    for key in document:
        if key not in _REQUIRED + _OPTIONAL:
            raise InstanceFormatError(f"Unknown key '{key}'.", key)

    space = _parse_space(document)
    horizon = document["horizon"]
    if not _is_int(horizon) or horizon < 0:
        raise InstanceFormatError(
            f"'horizon' must be a nonnegative integer, got {horizon!r}.", "horizon"
        )

    _check_names(document["filtrations"], "filtrations")
    if "F" not in document["filtrations"]:
        raise InstanceFormatError("Missing filtration 'F'.", "filtrations")
    filtrations = {
        name: _parse_filtration(name, parts, space, horizon)
        for name, parts in document["filtrations"].items()
    }
    if "G" in filtrations:
        try:
            FilteredPair(space, filtrations["F"], filtrations["G"])
        except ValueError as error:
            raise InstanceFormatError(str(error), "filtrations/G") from error

    times = document.get("times", dict())
    _check_names(times, "times")
    times = {
        name: _parse_time(name, values, space.n, horizon)
        for name, values in times.items()
    }
    processes = document.get("processes", dict())
    _check_names(processes, "processes")
    processes = {
        name: _parse_process(name, rows, space.n, horizon)
        for name, rows in processes.items()
    }
    return Instance(space, filtrations, times, processes)


def read_instance(fname: Union[str, Path]) -> Instance:
    """Read an instance file.

    Parameters
    ----------
    fname : str | Path
        Path to a JSON instance file.

    Returns
    -------
    instance : Instance

    Raises
    ------
    InstanceFormatError
        If the file is not valid JSON or does not describe a valid instance.
    """
    _check_type(fname, ("path-like",), "fname")
    fname = Path(fname)
    with open(fname, encoding="utf-8") as file:
        try:
            document = json.load(file)
        except json.JSONDecodeError as error:
            raise InstanceFormatError(
                f"Invalid JSON: {error.msg}.", f"line {error.lineno}"
            ) from error
    instance = parse_instance(document)
    logger.info("Instance loaded from '%s': %s", fname.name, instance)
    return instance


def write_instance(
    instance: Instance, fname: Union[str, Path], overwrite: bool = False
) -> None:
    """Write an instance file.

    Parameters
    ----------
    instance : Instance
        Instance to write.
    fname : str | Path
        Path to the JSON file.
    overwrite : bool
        If True, an existing file is replaced.
    """
    _check_type(instance, (Instance,), "instance")
    _check_type(fname, ("path-like",), "fname")
    _check_type(overwrite, (bool,), "overwrite")
    fname = Path(fname)
    if fname.exists() and not overwrite:
        raise FileExistsError(
            f"File '{fname}' already exists. Set 'overwrite=True' to replace it."
        )
    with open(fname, "w", encoding="utf-8") as file:
        json.dump(instance.to_dict(), file, indent=2)
        file.write("\n")
    logger.info("Instance written to '%s'.", fname.name)
