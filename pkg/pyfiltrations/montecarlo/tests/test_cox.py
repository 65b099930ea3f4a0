"""Test the uniformity of the dual optional projection at a Cox time."""

import pytest

from pyfiltrations.montecarlo import cox_uniformity


@pytest.mark.parametrize("intensity", ("unit", "decaying"))
def test_uniformity(intensity):
    """Test that Ao_tau is close to the uniform law."""
    report = cox_uniformity(2000, seed=0, intensity=intensity)
    assert report.ks_statistic < 0.1
    assert abs(report.estimate - 0.5) < 0.05
    assert report.details["intensity"] == intensity
    assert 0 <= report.details["ks_pvalue"] <= 1


@pytest.mark.parametrize("intensity", ("unit", "decaying"))
def test_adversarial(intensity):
    """Test that the self-check fails the KS test."""
    report = cox_uniformity(2000, seed=0, intensity=intensity, adversarial=True)
    assert report.ks_statistic > report.ks_threshold
    assert not report.passed


def test_wide_tolerance():
    """Test that small samples use the p-value."""
    report = cox_uniformity(10, seed=0)
    assert report.wide_tolerance
    assert report.passed == (0.01 < report.details["ks_pvalue"])


def test_invalid_arguments():
    """Test the validation of the arguments."""
    with pytest.raises(ValueError, match="'n_paths' must be at least 10"):
        cox_uniformity(9, seed=0)
    with pytest.raises(ValueError, match="'intensity' parameter"):
        cox_uniformity(100, seed=0, intensity="constant")
    with pytest.raises(TypeError, match="adversarial"):
        cox_uniformity(100, seed=0, adversarial=1)


def test_determinism():
    """Test that the report only depends on the seed and the parameters."""
    report1 = cox_uniformity(500, seed=7).to_dict()
    report2 = cox_uniformity(500, seed=7).to_dict()
    assert report1 == report2


@pytest.mark.slow
def test_acceptance():
    """Test the full-size run against the 1% threshold."""
    report = cox_uniformity(10**5, seed=7, n_jobs=-1)
    assert report.ks_statistic < report.ks_threshold
    assert report.passed
