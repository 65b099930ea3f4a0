"""Test _checks.py"""

import logging
import os
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from pyfiltrations.utils._checks import (
    _check_n_jobs,
    _check_positive,
    _check_seed,
    _check_type,
    _check_value,
    _check_verbose,
    _ensure_int,
)


def test_ensure_int():
    """Test _ensure_int checker."""
    assert _ensure_int(101) == 101
    assert _ensure_int(np.int64(3)) == 3
    with pytest.raises(TypeError, match="Item must be an int"):
        _ensure_int(101.0)
    with pytest.raises(TypeError, match="Item must be an int"):
        _ensure_int(True)
    with pytest.raises(TypeError, match="'horizon' must be an int"):
        _ensure_int([101], "horizon")


def test_check_type():
    """Test _check_type checker."""
    # valids
    assert _check_type(101, ("int",)) == 101
    assert _check_type("instance.json", ("path-like",)) == "instance.json"
    assert _check_type(Path("instance.json"), ("path-like",)) == Path("instance.json")
    _check_type((1, 0, 1), ("array-like",))
    _check_type([1, 0, 1], ("array-like",))
    _check_type(np.array([1, 0, 1]), ("array-like",))
    assert _check_type(101, ("numeric",)) == 101
    assert _check_type(0.5, ("numeric",)) == 0.5
    assert _check_type(Fraction(1, 3), ("rational",)) == Fraction(1, 3)
    assert _check_type(None, (int, None)) is None

    # invalids
    with pytest.raises(TypeError, match="Item must be an instance of"):
        _check_type(101, (float,))
    with pytest.raises(TypeError, match="Item must be an instance of"):
        _check_type(101, ("array-like",))
    with pytest.raises(TypeError, match="'p' must be an instance of rational"):
        _check_type(0.5, ("rational",), "p")
    with pytest.raises(TypeError, match="int, str, or None"):
        _check_type(0.5, (int, str, None))


def test_check_value():
    """Test _check_value checker."""
    # valids
    assert _check_value("free", ("free", "cox")) == "free"
    assert _check_value((1, 2), [(1, 2), (2, 3, 4, 5)]) == (1, 2)

    # invalids
    with pytest.raises(ValueError, match="Invalid value for the parameter."):
        _check_value(5, [1, 2, 3, 4])
    with pytest.raises(ValueError, match="Invalid value for the 'mode' parameter."):
        _check_value("bogus", ("free", "cox"), "mode")
    with pytest.raises(ValueError, match="The only allowed value is 'free'"):
        _check_value("bogus", ("free",), "mode")
    with pytest.raises(ValueError, match="parameter with cox mode"):
        _check_value("bogus", ("free", "cox"), "mode", extra="with cox mode")


def test_check_positive():
    """Test _check_positive checker."""
    assert _check_positive(0.1, "dt") == 0.1
    assert _check_positive(0, "dt", strict=False) == 0
    with pytest.raises(ValueError, match="'dt' must be strictly positive"):
        _check_positive(0, "dt")
    with pytest.raises(ValueError, match="'dt' must be positive"):
        _check_positive(-1, "dt", strict=False)
    with pytest.raises(TypeError, match="'dt' must be an instance of numeric"):
        _check_positive("1", "dt")


@pytest.mark.parametrize("seed", (0, 1, 2**64 - 1, np.uint64(7)))
def test_check_seed(seed):
    """Test _check_seed checker on valid seeds."""
    assert _check_seed(seed) == int(seed)


def test_check_seed_invalid():
    """Test _check_seed checker on invalid seeds."""
    with pytest.raises(ValueError, match="unsigned 64-bit integer"):
        _check_seed(-1)
    with pytest.raises(ValueError, match="unsigned 64-bit integer"):
        _check_seed(2**64)
    with pytest.raises(TypeError, match="'seed' must be an int"):
        _check_seed(1.0)


def test_check_n_jobs():
    """Test _check_n_jobs checker."""
    assert _check_n_jobs(1) == 1
    assert _check_n_jobs(5) == 5
    assert _check_n_jobs(101) == 101

    with pytest.raises(TypeError, match="'n_jobs' must be an instance of int"):
        _check_n_jobs("cuda")

    # all cores
    n = os.cpu_count()
    for k in range(n):
        assert _check_n_jobs(-k - 1) == n - k
    assert _check_n_jobs(-n) == 1
    with pytest.raises(ValueError, match="If n_jobs has a non-positive value"):
        _check_n_jobs(-n - 1)


def test_check_verbose():
    """Test check_verbose checker."""
    # valids
    assert _check_verbose(12) == 12
    assert _check_verbose("INFO") == logging.INFO
    assert _check_verbose("debug") == logging.DEBUG
    assert _check_verbose(True) == logging.INFO
    assert _check_verbose(False) == logging.WARNING
    assert _check_verbose(None) == logging.WARNING

    # invalids
    with pytest.raises(TypeError, match="must be an instance of"):
        _check_verbose(("INFO",))
    with pytest.raises(ValueError, match="Invalid value"):
        _check_verbose("101")
    with pytest.raises(ValueError, match="negative integer, -101 is invalid."):
        _check_verbose(-101)
