"""Test the instance files."""

import json
from fractions import Fraction

import pytest

from pyfiltrations.datasets import data_path, fix_a, fix_b, fix_b_witness, fix_c
from pyfiltrations.io import (
    Instance,
    InstanceFormatError,
    parse_instance,
    read_instance,
    write_instance,
)
from pyfiltrations.space.times import INF
from pyfiltrations.utils._logs import logger


def _document():
    return {
        "omega": 4,
        "probs": ["1/4", "1/4", "1/4", "1/4"],
        "horizon": 2,
        "filtrations": {
            "F": [[[0, 1, 2, 3]], [[0, 1], [2, 3]], [[0, 1], [2, 3]]],
            "G": [[[0, 1, 2, 3]], [[0], [1], [2], [3]], [[0], [1], [2], [3]]],
        },
        "times": {"tau": [1, 2, "inf", 1]},
    }


def test_parse_instance():
    """Test parsing of the reference document."""
    instance = parse_instance(_document())
    assert instance.pair == fix_a()
    assert instance.times["tau"] == fix_c()
    assert instance.times["tau"][2] == INF
    assert instance.horizon == 2
    assert instance.processes == {}
    assert instance.space.probs[0] == Fraction(1, 4)
    assert "T = 2" in repr(instance)


def test_round_trip():
    """Test that parse and serialize are inverse on canonical documents."""
    document = _document()
    document["processes"] = {
        "V": [["0/1"] * 4, ["1/2"] * 4, ["1/1", "3/2", "2/1", "5/3"]]
    }
    instance = parse_instance(document)
    assert instance.to_dict() == document
    assert parse_instance(instance.to_dict()) == instance


def test_filtration_only():
    """Test an instance without G."""
    document = _document()
    del document["filtrations"]["G"]
    instance = parse_instance(document)
    assert instance.pair is None
    assert instance.F == fix_a().F


def test_read_write(tmp_path, caplog, monkeypatch):
    """Test the file round trip and the bundled files."""
    monkeypatch.setattr(logger, "propagate", True)
    caplog.set_level("INFO", logger=logger.name)
    instance = Instance.from_pair(fix_b(), times={"nu": fix_b_witness()})
    write_instance(instance, tmp_path / "instance.json")
    assert "Instance written" in caplog.text
    assert read_instance(tmp_path / "instance.json") == instance
    assert read_instance(data_path("fix_b_witness")) == instance
    assert read_instance(data_path("fix_a_c")).digest == parse_instance(
        _document()
    ).digest
    with pytest.raises(FileExistsError, match="already exists"):
        write_instance(instance, tmp_path / "instance.json")
    write_instance(instance, tmp_path / "instance.json", overwrite=True)


def test_invalid_json(tmp_path):
    """Test that a file which is not JSON reports its line."""
    fname = tmp_path / "broken.json"
    fname.write_text('{\n  "omega": 4,\n  "probs": [\n}\n')
    with pytest.raises(InstanceFormatError, match="Invalid JSON") as error:
        read_instance(fname)
    assert error.value.location.startswith("line ")


def _invalid(**changes):
    document = _document()
    for key, value in changes.items():
        if value is None:
            del document[key]
        else:
            document[key] = value
    return document


@pytest.mark.parametrize(
    ("document", "location", "match"),
    [
        (_invalid(probs=["1/2", "1/2", "1/2", "1/2"]), "probs", "sum exactly to 1"),
        (_invalid(probs=["0/1", "1/2", "1/4", "1/4"]), "probs/0", "strictly positive"),
        (_invalid(probs=["1/4", "1/4", "x", "1/4"]), "probs/2", "rational"),
        (_invalid(probs=["1/4", "1/4", 0.25, "1/4"]), "probs/2", "'p/q'"),
        (_invalid(probs=["1/2", "1/2"]), "probs", "list of 4"),
        (_invalid(omega=0), "omega", "strictly positive"),
        (_invalid(horizon=-1), "horizon", "nonnegative"),
        (_invalid(horizon=None), "horizon", "Missing key"),
        (_invalid(extra=1), "extra", "Unknown key"),
        (_invalid(times={"tau": [1, 2, 3, 1]}), "times/tau/2", "beyond the horizon"),
        (_invalid(times={"tau": [1, 2, -1, 1]}), "times/tau/2", "nonnegative"),
        (_invalid(times={"tau": [1, 2]}), "times/tau", "list of 4"),
        (
            _invalid(
                filtrations={
                    "F": [[[0, 1, 2, 3]], [[0, 1], [2, 3]], [[0, 2], [1, 3]]]
                }
            ),
            "filtrations/F/2",
            "does not refine",
        ),
        (
            _invalid(
                filtrations={"F": [[[0, 1, 2, 3]], [[0, 1], [2]], [[0, 1], [2, 3]]]}
            ),
            "filtrations/F/1",
            "union of the blocks",
        ),
        (
            _invalid(filtrations={"G": [[[0, 1, 2, 3]]] * 3}),
            "filtrations",
            "Missing filtration 'F'",
        ),
        (
            _invalid(
                filtrations={
                    "F": [[[0, 1, 2, 3]], [[0, 1], [2, 3]], [[0, 1], [2, 3]]],
                    "G": [[[0, 1, 2, 3]]] * 3,
                }
            ),
            "filtrations/G",
            "does not refine",
        ),
        (
            _invalid(processes={"V": [["1/1"] * 4, ["1/1"] * 4]}),
            "processes/V",
            "shape",
        ),
        (
            _invalid(processes={"V": [["1/1"] * 4, ["1/1"] * 4, [1.5] * 4]}),
            "processes/V/2/0",
            "'p/q'",
        ),
    ],
)
def test_invalid_instance(document, location, match):
    """Test the diagnostics of invalid documents."""
    with pytest.raises(InstanceFormatError, match=match) as error:
        parse_instance(document)
    assert error.value.location == location
    assert isinstance(error.value, ValueError)


def test_document_type():
    """Test that a document must be an object."""
    with pytest.raises(InstanceFormatError, match="JSON object"):
        parse_instance(json.loads("[1, 2]"))
