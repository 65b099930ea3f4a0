"""Test pseudo-stopping times and the five-way characterization."""

from fractions import Fraction

import pytest

from pyfiltrations.datasets import fix_a, fix_b, fix_b_witness, fix_c, fix_d
from pyfiltrations.lab import enumerate_stopping_times, is_pseudo_stopping, ny2_check
from pyfiltrations.space import RandomTime
from pyfiltrations.space.times import INF
from pyfiltrations.utils._logs import logger, set_log_level

F_a = fix_a().F
F_b = fix_b().F


def test_stopping_times_are_pseudo_stopping():
    """Test optional stopping on every F-stopping time."""
    for F in (F_a, F_b):
        for tau in enumerate_stopping_times(F, cap=1000):
            assert is_pseudo_stopping(tau, F)


def test_is_pseudo_stopping():
    """Test the reference instances."""
    assert is_pseudo_stopping(fix_c(), F_a)
    pseudo, witness = is_pseudo_stopping(fix_b_witness(), F_b, return_witness=True)
    assert not pseudo
    assert witness.condition == "pseudo-stopping"
    assert witness.block == (0,)
    assert witness.values == (Fraction(1, 8), Fraction(1, 4))
    assert witness.tau == (1, 2, 2, 2)
    assert not is_pseudo_stopping(fix_d(), F_b)


def test_is_pseudo_stopping_invalid():
    """Test the validation of the random time."""
    with pytest.raises(ValueError, match="one value per outcome"):
        is_pseudo_stopping(RandomTime([0, 1]), F_a)
    with pytest.raises(ValueError, match="beyond the horizon"):
        is_pseudo_stopping(RandomTime([0, 1, 3, 0]), F_a)


@pytest.mark.parametrize(
    "tau, F, expected",
    [
        (fix_c(), F_a, True),
        (fix_d(), F_b, False),
        (RandomTime.constant(INF, 4), F_b, True),
        (RandomTime([1, 1, 2, 2]), F_b, True),
    ],
)
def test_ny2_check(tau, F, expected):
    """Test that the five conditions agree on the reference instances."""
    report = ny2_check(tau, F)
    assert report.name == "ny2"
    assert report.agree
    assert report.holds is expected
    assert len(report.conditions) == 5
    if expected:
        assert report.witness is None
        assert report.assertions == (("ztilde-nonincreasing", True),)
        assert report.sound
    else:
        assert report.witness.condition == "pseudo-stopping"
        assert report.assertions == ()
    assert not report.failed


def test_ny2_check_digest():
    """Test that the digest identifies the filtration and the time."""
    assert ny2_check(fix_c(), F_a).instance_digest == ny2_check(
        fix_c(), F_a
    ).instance_digest
    assert ny2_check(fix_c(), F_a).instance_digest != ny2_check(
        RandomTime([1, 2, 2, 1]), F_a
    ).instance_digest
    assert ny2_check(fix_c(), F_a, digest="abc").instance_digest == "abc"


def test_ny2_check_logs(caplog, monkeypatch):
    """Test the headline log at INFO."""
    monkeypatch.setattr(logger, "propagate", True)
    set_log_level("WARNING")
    caplog.clear()
    ny2_check(fix_d(), F_b)
    assert "ny2 on" not in caplog.text
    ny2_check(fix_d(), F_b, verbose="INFO")
    assert "ny2 on" in caplog.text
    assert "agree=True" in caplog.text
