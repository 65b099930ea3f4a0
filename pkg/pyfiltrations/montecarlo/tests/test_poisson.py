"""Test the Poisson example of a time which is not pseudo-stopping."""

import math

import numpy as np
import pytest

from pyfiltrations.montecarlo import poisson, poisson_example


def test_poisson_example():
    """Test the estimate of E[M_tau] = -1/2."""
    report = poisson_example(1.0, 2000, seed=0, n_inner=500)
    assert report.target == -0.5
    assert report.estimate < 0
    assert abs(report.estimate + 0.5) < 5 * report.stderr
    assert report.details["tau"] == [report.estimate, report.stderr]
    assert not report.wide_tolerance


def test_stopping_time_branch():
    """Test that the compensated martingale has mean 0 at T2."""
    report = poisson_example(2.0, 2000, seed=0, stop_at="T2", n_inner=500)
    assert report.target == 0
    assert abs(report.estimate) < 5 * report.stderr
    assert report.details["compensated_T2"] == [report.estimate, report.stderr]


def test_ztilde_checks():
    """Test the points where the closed form of Z~ is compared."""
    report = poisson_example(1.0, 100, seed=5, n_inner=200)
    checks = report.details["ztilde_checks"]
    assert len(checks) == 5
    assert (checks[0]["T1"], checks[0]["t"]) == (0.3, 0.8)
    assert checks[0]["closed_form"] == pytest.approx(math.exp(-0.5))
    for check in checks:
        assert check["T1"] <= check["t"]
        assert 0 <= check["estimate"] <= 1
    assert report.details["subchecks_passed"] == all(c["passed"] for c in checks)


@pytest.mark.parametrize("lam", (4.0, 40.0, 400.0))
def test_high_intensity(lam):
    """Test that the checks of Z~ stay within 2 / lam of T1 for large intensities."""
    report = poisson_example(lam, 1000, seed=0, n_inner=1000)
    checks = report.details["ztilde_checks"]
    assert checks[0]["T1"] == 0.3
    assert checks[0]["t"] == pytest.approx(0.3 + min(0.5, 2 / lam))
    for check in checks:
        assert check["t"] - check["T1"] <= 2 / lam + 1e-12
        assert check["closed_form"] >= math.exp(-2) - 1e-12
    assert abs(report.estimate + 0.5) < 5 * report.stderr


def test_determinism():
    """Test that the report only depends on the seed and the parameters."""
    report1 = poisson_example(1.0, 500, seed=11, n_inner=100)
    report2 = poisson_example(1.0, 500, seed=11, n_inner=100)
    assert report1.to_dict() == report2.to_dict()


def test_identity_failure(monkeypatch):
    """Test that a wrong value of M_tau on a path is an error."""
    monkeypatch.setattr(
        poisson, "_compensated", lambda s, T1, T2, lam: np.zeros_like(s)
    )
    with pytest.raises(RuntimeError, match="differs from"):
        poisson_example(1.0, 10, seed=0, n_inner=10)


@pytest.mark.parametrize("lam", (0, -1.0))
def test_invalid_intensity(lam):
    """Test that the intensity must be strictly positive."""
    with pytest.raises(ValueError, match="'lam' must be strictly positive"):
        poisson_example(lam, 10, seed=0)


def test_invalid_arguments():
    """Test the validation of the other arguments."""
    with pytest.raises(ValueError, match="'stop_at' parameter"):
        poisson_example(1.0, 10, seed=0, stop_at="T1")
    with pytest.raises(ValueError, match="'n_inner' must be at least 1"):
        poisson_example(1.0, 10, seed=0, n_inner=0)


@pytest.mark.slow
def test_acceptance():
    """Test the full-size run, including the checks of Z~."""
    report = poisson_example(1.0, 10**5, seed=0, n_jobs=-1)
    assert report.passed
