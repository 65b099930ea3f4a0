"""Deterministic generator of random instances for the theorem suite."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np
from numpy.random import Generator

from .._typing import Process
from ..space.filtration import FilteredPair, Filtration
from ..space.partition import Partition
from ..space.space import SampleSpace
from ..space.stopping import progressive_enlargement
from ..space.times import INF, RandomTime
from ..utils._checks import _check_seed, _check_type, _check_value, _ensure_int
from .enumeration import sample_stopping_time

MODES = ("free", "refining", "product_immersed", "cox")


@dataclass(frozen=True)
class GeneratorParams:
    """Parameters of a random instance.

    Parameters
    ----------
    omega_max : int
        Maximum number of outcomes, at least 2.
    horizon_max : int
        Maximum horizon, at least 1.
    mode : str
        ``'free'`` draws nested filtrations and an arbitrary random time.
        ``'refining'`` additionally forces the time to be a G-stopping time.
        ``'product_immersed'`` builds ``F`` and ``G`` on a product space so that
        ``F`` is immersed in ``G``, with a G-stopping time. ``'cox'`` builds a
        default time from an F-adapted hazard and an independent barrier, with
        ``G`` the progressive enlargement of ``F``.
    seed : int
        Unsigned 64-bit seed. The instance is a pure function of the parameters.
    """

    omega_max: int = 8
    horizon_max: int = 4
    mode: str = "free"
    seed: int = 0

    def __post_init__(self):
        omega_max = _ensure_int(self.omega_max, "omega_max")
        horizon_max = _ensure_int(self.horizon_max, "horizon_max")
        if omega_max < 2:
            raise ValueError(
                f"Argument 'omega_max' must be at least 2. Provided: '{omega_max}'."
            )
        if horizon_max < 1:
            raise ValueError(
                f"Argument 'horizon_max' must be at least 1. Provided: '{horizon_max}'."
            )
        _check_type(self.mode, (str,), "mode")
        _check_value(self.mode, MODES, "mode")
        _check_seed(self.seed)


def _random_probs(n: int, rng: Generator) -> List[Fraction]:
    weights = [int(w) for w in rng.integers(1, 10, size=n)]
    total = sum(weights)
    return [Fraction(w, total) for w in weights]


def _random_labels(n: int, horizon: int, rng: Generator) -> List[List[tuple]]:
    """Labels of a random refining sequence of partitions of n outcomes."""
    if rng.random() < 0.5:
        labels = [()] * n
    else:
        labels = [(int(v),) for v in rng.integers(0, 2, size=n)]
    out = [labels]
    for _ in range(horizon):
        splits = rng.integers(0, 2, size=n)
        labels = [label + (int(s),) for label, s in zip(labels, splits)]
        out.append(labels)
    return out


def _filtration(labels: Sequence[Sequence], space: SampleSpace) -> Filtration:
    return Filtration([Partition.from_labels(level) for level in labels], space)


def random_increasing_process(
    F: Filtration, rng: Generator, adapted: bool = True
) -> Process:
    """Random process with nondecreasing integer paths.

    Parameters
    ----------
    F : Filtration
        Filtration the process lives on.
    rng : Generator
        NumPy random generator.
    adapted : bool
        If True, every increment is constant on the blocks of ``F[t]``.

    Returns
    -------
    V : array of shape (T + 1, n)
    """
    T, n = F.horizon, F.n
    steps = rng.integers(0, 3, size=(T + 1, n))
    if adapted:
        for t, part in enumerate(F):
            for block in part:
                steps[t, list(block)] = steps[t, block[0]]
    V = np.cumsum(steps, axis=0)
    return np.vectorize(lambda v: Fraction(int(v)), otypes=[object])(V)


def _random_time(n: int, horizon: int, rng: Generator) -> RandomTime:
    values = rng.integers(0, horizon + 2, size=n)
    return RandomTime([INF if v == horizon + 1 else int(v) for v in values])


def _split(n_max: int, rng: Generator) -> Tuple[int, int]:
    """Sizes of the two coordinates of a product space with at most n_max pairs."""
    n1 = int(rng.integers(1, n_max // 2 + 1))
    n2 = int(rng.integers(2 if n1 == 1 else 1, n_max // n1 + 1))
    return n1, n2


def _lift(labels: List[List], n1: int, n2: int, coordinate: int) -> List[List]:
    """Labels of one coordinate as labels of the pairs ``(i, j) -> i * n2 + j``."""
    if coordinate == 0:
        return [[level[i] for i in range(n1) for _ in range(n2)] for level in labels]
    return [[level[j] for _ in range(n1) for j in range(n2)] for level in labels]


def _random_hazard(labels: List[List], rng: Generator) -> np.ndarray:
    """Nondecreasing integer process adapted to the partitions of the labels."""
    horizon, n = len(labels) - 1, len(labels[0])
    hazard = np.zeros((horizon + 1, n), dtype=int)
    for t, level in enumerate(labels):
        step = np.zeros(n, dtype=int)
        for block in Partition.from_labels(level):
            step[list(block)] = rng.integers(0, 2)
        hazard[t] = step if t == 0 else hazard[t - 1] + step
    return hazard


def gen_random_instance(params: GeneratorParams) -> Tuple[FilteredPair, RandomTime]:
    """Generate a random filtered pair and random time.

    Parameters
    ----------
    params : GeneratorParams
        Sizes, mode and seed.

    Returns
    -------
    pair : FilteredPair
        Filtrations ``F ⊂ G`` on at most ``omega_max`` outcomes.
    tau : RandomTime
        Random time, a G-stopping time in every mode but ``'free'``.
    """
    _check_type(params, (GeneratorParams,), "params")
    rng = np.random.default_rng(params.seed)
    horizon = int(rng.integers(1, params.horizon_max + 1))

    if params.mode in ("free", "refining"):
        n = int(rng.integers(2, params.omega_max + 1))
        space = SampleSpace(_random_probs(n, rng))
        labels = _random_labels(n, horizon, rng)
        extra = _random_labels(n, horizon, rng)
        F = _filtration(labels, space)
        G = _filtration([list(zip(a, b)) for a, b in zip(labels, extra)], space)
        if params.mode == "free":
            tau = _random_time(n, horizon, rng)
        else:
            tau = sample_stopping_time(G, rng)
        return FilteredPair(space, F, G), tau

    n1, n2 = _split(params.omega_max, rng)
    p1 = _random_probs(n1, rng)
    p2 = _random_probs(n2, rng)
    space = SampleSpace([a * b for a in p1 for b in p2])
    labels1 = _random_labels(n1, horizon, rng)
    lifted1 = _lift(labels1, n1, n2, 0)
    F = _filtration(lifted1, space)

    if params.mode == "product_immersed":
        lifted2 = _lift(_random_labels(n2, horizon, rng), n1, n2, 1)
        G = _filtration([list(zip(a, b)) for a, b in zip(lifted1, lifted2)], space)
        return FilteredPair(space, F, G), sample_stopping_time(G, rng)

    # cox: default when the hazard of the first coordinate reaches the barrier
    # j + 1 drawn by the second one
    hazard = _random_hazard(labels1, rng)
    values = list()
    for i in range(n1):
        for j in range(n2):
            hits = np.flatnonzero(hazard[:, i] >= j + 1)
            values.append(int(hits[0]) if hits.size != 0 else INF)
    tau = RandomTime(values)
    G = progressive_enlargement(F, tau)
    return FilteredPair(space, F, G), tau
