"""Exhaustive enumeration and random sampling of stopping times."""

import math
from functools import lru_cache
from itertools import product
from typing import Iterator, List, Optional, Tuple

import numpy as np
from numpy.random import Generator
from numpy.typing import NDArray

from ..space.filtration import Filtration
from ..space.times import INF, RandomTime
from ..utils._checks import _check_type, _ensure_int
from ..utils._docs import fill_doc


class StoppingTimeEnumerationError(RuntimeError):
    """Raised when a filtration has more stopping times than the enumeration cap.

    Parameters
    ----------
    count : int
        Exact number of stopping times of the filtration.
    cap : int
        Enumeration cap which was exceeded.
    """

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(
            f"The filtration has {count} stopping times, more than the enumeration "
            f"cap of {cap}."
        )


def _check_cap(cap) -> int:
    cap = _ensure_int(cap, "cap")
    if cap <= 0:
        raise ValueError(
            f"Argument 'cap' must be a positive integer. Provided: '{cap}'."
        )
    return cap


def count_stopping_times(F: Filtration) -> int:
    """Count the stopping times of a filtration.

    Parameters
    ----------
    F : Filtration
        Filtration whose stopping times are counted, infinity included as a value.

    Returns
    -------
    count : int
        Number of stopping times. On a block ``C`` of ``F[t]``, a stopping time either
        stops at ``t`` on all of ``C`` or continues independently on each child block,
        hence ``f(T, C) = 2`` and ``f(t, C) = 1 + prod f(t + 1, child)``.
    """
    _check_type(F, (Filtration,), "F")

    @lru_cache(maxsize=None)
    def _count(t: int, block: Tuple[int, ...]) -> int:
        if t == F.horizon:
            return 2
        children = F.children(t, block)
        return 1 + math.prod(_count(t + 1, child) for child in children)

    return math.prod(_count(0, block) for block in F[0])


def _block_options(F: Filtration):
    """Return the memoized list of assignments of a block of F[t]."""

    @lru_cache(maxsize=None)
    def _options(t: int, block: Tuple[int, ...]) -> List[Tuple[Tuple[int, int], ...]]:
        options = [tuple((k, t) for k in block)]
        if t == F.horizon:
            options.append(tuple((k, F.horizon + 1) for k in block))
            return options
        children = [_options(t + 1, child) for child in F.children(t, block)]
        for combination in product(*children):
            options.append(tuple(pair for option in combination for pair in option))
        return options

    return _options


def _iter_codes(F: Filtration) -> Iterator[NDArray[int]]:
    """Yield the stopping times as integer codes, infinity encoded as ``T + 1``."""
    options = _block_options(F)
    roots = [options(0, block) for block in F[0]]
    for combination in product(*roots):
        codes = np.empty(F.n, dtype=np.intp)
        for option in combination:
            for k, value in option:
                codes[k] = value
        yield codes


def _iter_code_batches(F: Filtration, batch_size: int = 4096) -> Iterator[NDArray[int]]:
    """Yield the stopping times as arrays of codes of shape (batch, n)."""
    batch = list()
    for codes in _iter_codes(F):
        batch.append(codes)
        if len(batch) == batch_size:
            yield np.array(batch)
            batch = list()
    if len(batch) != 0:
        yield np.array(batch)


def _from_codes(codes: NDArray[int], horizon: int) -> RandomTime:
    return RandomTime([INF if c == horizon + 1 else int(c) for c in codes])


@fill_doc
def enumerate_stopping_times(F: Filtration, cap: int) -> Iterator[RandomTime]:
    """Enumerate the stopping times of a filtration.

    Parameters
    ----------
    F : Filtration
        Filtration whose stopping times are enumerated, infinity included as a value.
    %(cap)s

    Yields
    ------
    tau : RandomTime
        Each stopping time exactly once, by recursion over the atom tree of ``F``.

    Raises
    ------
    StoppingTimeEnumerationError
        If the number of stopping times exceeds ``cap``. The error is raised before
        any stopping time is emitted.
    """
    _check_type(F, (Filtration,), "F")
    cap = _check_cap(cap)
    count = count_stopping_times(F)
    if cap < count:
        raise StoppingTimeEnumerationError(count, cap)
    return (_from_codes(codes, F.horizon) for codes in _iter_codes(F))


def sample_stopping_time(
    F: Filtration, rng: Generator, p_stop: float = 0.35
) -> RandomTime:
    """Draw a random stopping time by a random walk down the atom tree.

    Parameters
    ----------
    F : Filtration
        Filtration the stopping time is adapted to.
    rng : Generator
        NumPy random generator.
    p_stop : float
        Probability to stop on a block before descending to its children.

    Returns
    -------
    tau : RandomTime
    """
    values = [INF] * F.n

    def _walk(t: int, block: Tuple[int, ...]) -> None:
        if rng.random() < p_stop:
            for k in block:
                values[k] = t
        elif t < F.horizon:
            for child in F.children(t, block):
                _walk(t + 1, child)

    for block in F[0]:
        _walk(0, block)
    return RandomTime(values)


def two_valued_stopping_times(F: Filtration) -> Iterator[RandomTime]:
    """Stopping times equal to ``t - 1`` on a block of ``F[t - 1]`` and ``t`` elsewhere.

    Parameters
    ----------
    F : Filtration
        Filtration the stopping times are adapted to.

    Yields
    ------
    tau : RandomTime
        One stopping time per ``t`` in ``1..T`` and block ``C`` of ``F[t - 1]``. A
        martingale ``M`` satisfies ``E[M_tau] = E[M_0]`` on the whole family if and
        only if ``E[M_t | F_{t-1}] = M_{t-1}``.
    """
    for t in range(1, F.horizon + 1):
        for block in F[t - 1]:
            values = [t] * F.n
            for k in block:
                values[k] = t - 1
            yield RandomTime(values)


def _sample_codes(
    F: Filtration, rng: Generator, n_samples: int, exclude: Optional[set] = None
) -> NDArray[int]:
    """Codes of random stopping times, without duplicates."""
    seen = set() if exclude is None else set(exclude)
    samples = list()
    for _ in range(n_samples):
        codes = tuple(sample_stopping_time(F, rng).codes(F.horizon))
        if codes not in seen:
            seen.add(codes)
            samples.append(codes)
    return np.array(samples, dtype=np.intp).reshape(-1, F.n)
