"""Test the random instance generator."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pyfiltrations.lab import (
    MODES,
    GeneratorParams,
    gen_random_instance,
    is_immersed,
    random_increasing_process,
)
from pyfiltrations.space import (
    instance_digest,
    is_adapted,
    is_stopping_time,
    progressive_enlargement,
    refines,
)

seeds = st.integers(min_value=0, max_value=2**64 - 1)


def _digest(pair, tau):
    return instance_digest(pair.space, {"F": pair.F, "G": pair.G}, {"tau": tau})


@pytest.mark.parametrize("mode", MODES)
def test_deterministic(mode):
    """Test that the instance is a function of the parameters."""
    params = GeneratorParams(8, 4, mode, 12345)
    assert _digest(*gen_random_instance(params)) == _digest(
        *gen_random_instance(params)
    )
    digests = {
        _digest(*gen_random_instance(GeneratorParams(8, 4, mode, seed)))
        for seed in range(20)
    }
    assert 1 < len(digests)


@settings(max_examples=40, deadline=None)
@given(seed=seeds, mode=st.sampled_from(MODES))
def test_sizes(seed, mode):
    """Test the bounds on the number of outcomes and the horizon."""
    pair, tau = gen_random_instance(GeneratorParams(6, 3, mode, seed))
    assert 2 <= pair.space.n <= 6
    assert 1 <= pair.horizon <= 3
    assert len(tau) == pair.space.n
    assert all(refines(g, f) for f, g in zip(pair.F, pair.G))


@settings(max_examples=40, deadline=None)
@given(seed=seeds)
def test_refining(seed):
    """Test that the time is a G-stopping time in mode refining."""
    pair, tau = gen_random_instance(GeneratorParams(8, 4, "refining", seed))
    assert is_stopping_time(tau, pair.G)


@settings(max_examples=40, deadline=None)
@given(seed=seeds)
def test_product_immersed(seed):
    """Test that the product construction is immersed."""
    pair, tau = gen_random_instance(GeneratorParams(8, 4, "product_immersed", seed))
    assert is_immersed(pair)
    assert is_stopping_time(tau, pair.G)


@settings(max_examples=40, deadline=None)
@given(seed=seeds)
def test_cox(seed):
    """Test the default time of the Cox construction."""
    pair, tau = gen_random_instance(GeneratorParams(8, 4, "cox", seed))
    assert pair.G == progressive_enlargement(pair.F, tau)
    assert is_stopping_time(tau, pair.G)
    assert is_immersed(pair)


def test_random_increasing_process():
    """Test the paths and the adaptedness of random increasing processes."""
    pair, _ = gen_random_instance(GeneratorParams(8, 4, "free", 7))
    rng = np.random.default_rng(0)
    V = random_increasing_process(pair.G, rng, adapted=True)
    assert V.shape == (pair.horizon + 1, pair.space.n)
    assert np.all(V[1:] >= V[:-1])
    assert is_adapted(V, pair.G)
    V = random_increasing_process(pair.G, rng, adapted=False)
    assert np.all(V[1:] >= V[:-1])


def test_invalid_params():
    """Test the validation of the parameters."""
    with pytest.raises(ValueError, match="'omega_max' must be at least 2"):
        GeneratorParams(omega_max=1)
    with pytest.raises(ValueError, match="'horizon_max' must be at least 1"):
        GeneratorParams(horizon_max=0)
    with pytest.raises(ValueError, match="Invalid value for the 'mode' parameter"):
        GeneratorParams(mode="mixed")
    with pytest.raises(ValueError, match="unsigned 64-bit"):
        GeneratorParams(seed=2**64)
    with pytest.raises(TypeError, match="'omega_max' must be an int"):
        GeneratorParams(omega_max=8.0)
    with pytest.raises(TypeError, match="'params' must be an instance of"):
        gen_random_instance({"seed": 0})
