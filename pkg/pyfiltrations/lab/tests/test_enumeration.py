"""Test the enumeration and sampling of stopping times."""

import numpy as np
import pytest

from pyfiltrations.datasets import fix_a, fix_b
from pyfiltrations.lab import (
    StoppingTimeEnumerationError,
    count_stopping_times,
    enumerate_stopping_times,
    sample_stopping_time,
    two_valued_stopping_times,
)
from pyfiltrations.space import Filtration, RandomTime, SampleSpace, is_stopping_time
from pyfiltrations.space.times import INF

G_a = fix_a().G


def test_count_fix_a():
    """Test the count on the discrete-after-0 filtration."""
    assert count_stopping_times(G_a) == 82
    times = list(enumerate_stopping_times(G_a, cap=1000))
    assert len(times) == 82
    assert len(set(times)) == 82
    assert all(is_stopping_time(tau, G_a) for tau in times)
    assert RandomTime([0, 0, 0, 0]) in times
    assert RandomTime([1, 2, INF, 1]) in times


def test_count_trivial():
    """Test the four deterministic stopping times of a trivial filtration."""
    F = Filtration.trivial(SampleSpace.uniform(3), 2)
    assert count_stopping_times(F) == 4
    times = set(enumerate_stopping_times(F, cap=4))
    expected = {RandomTime.constant(v, 3) for v in (0, 1, 2, INF)}
    assert times == expected


def test_count_matches_enumeration():
    """Test the counting recursion against the enumeration."""
    F = fix_b().F
    count = count_stopping_times(F)
    assert count == len(set(enumerate_stopping_times(F, cap=count)))
    assert all(is_stopping_time(tau, F) for tau in enumerate_stopping_times(F, count))


def test_cap_exceeded():
    """Test that the cap is checked before anything is emitted."""
    with pytest.raises(StoppingTimeEnumerationError, match="82 stopping times") as exc:
        enumerate_stopping_times(G_a, cap=5)
    assert exc.value.count == 82
    assert exc.value.cap == 5
    with pytest.raises(ValueError, match="positive integer"):
        enumerate_stopping_times(G_a, cap=0)
    with pytest.raises(TypeError, match="'cap' must be an int"):
        enumerate_stopping_times(G_a, cap=5.0)


def test_sample_stopping_time():
    """Test that sampled times are stopping times and depend on the seed only."""
    rng = np.random.default_rng(101)
    samples = [sample_stopping_time(G_a, rng) for _ in range(50)]
    assert all(is_stopping_time(tau, G_a) for tau in samples)
    rng = np.random.default_rng(101)
    assert samples == [sample_stopping_time(G_a, rng) for _ in range(50)]


def test_two_valued_stopping_times():
    """Test the family of two-valued stopping times."""
    times = list(two_valued_stopping_times(G_a))
    # one for t=1 (trivial F_0) and four for t=2 (discrete F_1)
    assert len(times) == 5
    assert times[0] == RandomTime([0, 0, 0, 0])
    assert times[1] == RandomTime([1, 2, 2, 2])
    assert all(is_stopping_time(tau, G_a) for tau in times)
