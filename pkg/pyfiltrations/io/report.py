"""Report files: one JSON record per line."""

import json
from pathlib import Path
from typing import IO, Iterable, List, Optional, Union

from .._report import CheckReport
from ..montecarlo.report import McReport
from ..utils._checks import _check_type


def report_record(
    report: Union[CheckReport, McReport], timing: Optional[float] = None, **extra
) -> dict:
    """Serializable record of a report.

    Parameters
    ----------
    report : CheckReport | McReport
        Report to serialize.
    timing : float | None
        Wall-clock duration in seconds. Omitted if None, so that records are
        reproducible byte for byte.
    **extra
        Additional fields, e.g. the name of the random time or the trial index.

    Returns
    -------
    record : dict
    """
    _check_type(report, (CheckReport, McReport), "report")
    record = report.to_dict()
    record.update(extra)
    if timing is not None:
        record["timing"] = timing
    return record


def dumps_record(record: dict) -> str:
    """Encode a record on a single line with sorted keys.

    Floats are written with the shortest representation which round-trips.
    """
    return json.dumps(record, sort_keys=True, allow_nan=False, ensure_ascii=False)


def write_records(records: Iterable[dict], fid: IO) -> int:
    """Write records as JSON lines and return the number of records written."""
    count = 0
    for record in records:
        fid.write(dumps_record(record) + "\n")
        fid.flush()
        count += 1
    return count


def read_records(fname: Union[str, Path]) -> List[dict]:
    """Read a file of JSON lines, skipping empty lines."""
    _check_type(fname, ("path-like",), "fname")
    with open(fname, encoding="utf-8") as file:
        return [json.loads(line) for line in file if len(line.strip()) != 0]
