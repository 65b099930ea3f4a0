"""Reproducible chunked sampling."""

import math
from typing import Callable, List, Tuple

import numpy as np
from joblib import Parallel, delayed
from numpy.random import SeedSequence
from numpy.typing import NDArray

from ..utils._checks import _check_n_jobs, _check_seed, _ensure_int
from ..utils._config import get_config
from ..utils._logs import logger
from .report import WIDE_TOLERANCE_PATHS

CHUNK_SIZE = 10000


def _check_n_paths(n_paths, minimum: int = 1, item_name: str = "n_paths") -> int:
    n_paths = _ensure_int(n_paths, item_name)
    if n_paths < minimum:
        raise ValueError(
            f"Argument '{item_name}' must be at least {minimum}. "
            f"Provided: '{n_paths}'."
        )
    return n_paths


def _chunks(
    n_paths: int, seed_sequence: SeedSequence
) -> List[Tuple[int, SeedSequence]]:
    """Split the paths in chunks of fixed size, each with its own substream."""
    sizes = [CHUNK_SIZE] * (n_paths // CHUNK_SIZE)
    if n_paths % CHUNK_SIZE != 0:
        sizes.append(n_paths % CHUNK_SIZE)
    return list(zip(sizes, seed_sequence.spawn(len(sizes))))


def _sample(
    func: Callable, n_paths: int, seed_sequence: SeedSequence, n_jobs, *args
) -> Tuple[NDArray[float], ...]:
    """Run ``func(size, seed_sequence, *args)`` on every chunk and concatenate.

    ``func`` returns a tuple of arrays of length ``size``. The result depends on
    the seed and the number of paths, not on ``n_jobs``.
    """
    n_jobs = get_config()["N_JOBS"] if n_jobs is None else n_jobs
    n_jobs = _check_n_jobs(n_jobs)
    chunks = _chunks(n_paths, seed_sequence)
    logger.debug("Sampling %i paths in %i chunk(s).", n_paths, len(chunks))
    if n_jobs == 1 or len(chunks) == 1:
        results = [func(size, child, *args) for size, child in chunks]
    else:
        results = Parallel(n_jobs=n_jobs)(
            delayed(func)(size, child, *args) for size, child in chunks
        )
    return tuple(np.concatenate(arrays) for arrays in zip(*results))


def _streams(seed: int, n_streams: int) -> List[SeedSequence]:
    """Independent root sequences of an experiment, e.g. outer paths and checks."""
    seed = _check_seed(seed)
    return SeedSequence(seed).spawn(n_streams)


def _mean_stderr(values: NDArray[float]) -> Tuple[float, float]:
    """Compensated mean and standard error of a sample."""
    n = values.size
    mean = math.fsum(values) / n
    if n == 1:
        return mean, 0.0
    variance = math.fsum((values - mean) ** 2) / (n - 1)
    return mean, math.sqrt(variance / n)


def _is_wide(n_paths: int) -> bool:
    return n_paths < WIDE_TOLERANCE_PATHS
