"""Reference instances on four equally likely outcomes."""

from importlib.resources import files
from pathlib import Path

from ..space import FilteredPair, Filtration, Partition, RandomTime, SampleSpace
from ..space.times import INF
from ..utils._checks import _check_type, _check_value

_INSTANCES = ("fix_a_c", "fix_b_witness")


def _filtrations(terminal_discrete: bool) -> FilteredPair:
    space = SampleSpace.uniform(4)
    halves = Partition([[0, 1], [2, 3]])
    terminal = Partition.discrete(4) if terminal_discrete else halves
    F = Filtration([Partition.trivial(4), halves, terminal], space)
    G = Filtration(
        [Partition.trivial(4), Partition.discrete(4), Partition.discrete(4)], space
    )
    return FilteredPair(space, F, G)


def fix_a() -> FilteredPair:
    """Immersed pair: F reveals the half at t=1, G reveals the outcome at t=1.

    Returns
    -------
    pair : FilteredPair
        ``F = (trivial, {{0, 1}, {2, 3}}, {{0, 1}, {2, 3}})`` and
        ``G = (trivial, discrete, discrete)`` on 4 equally likely outcomes. Every
        F-martingale is constant after t=1, so F is immersed in G.
    """
    return _filtrations(terminal_discrete=False)


def fix_b() -> FilteredPair:
    """Non-immersed pair: as `fix_a` but F reveals the outcome at t=2.

    Returns
    -------
    pair : FilteredPair
        The F-martingale ``P(outcome 0 | F_t)`` jumps at t=2, which G already knows at
        t=1, so F is not immersed in G.
    """
    return _filtrations(terminal_discrete=True)


def fix_c() -> RandomTime:
    """Pseudo-stopping time ``(1, 2, inf, 1)`` for the F of `fix_a`.

    It is a G-stopping time but not an F-stopping time.
    """
    return RandomTime([1, 2, INF, 1])


def fix_d() -> RandomTime:
    """Honest time ``(2, 1, 1, 2)`` for the F of `fix_b`.

    It is neither a stopping time nor a pseudo-stopping time.
    """
    return RandomTime([2, 1, 1, 2])


def fix_b_witness() -> RandomTime:
    """G-stopping time ``(1, 2, 2, 2)`` of `fix_b` which is not F-pseudo-stopping."""
    return RandomTime([1, 2, 2, 2])


def data_path(name: str) -> Path:
    """Get the path to a bundled instance file.

    Parameters
    ----------
    name : str
        ``'fix_a_c'`` for the pair of `fix_a` with the time of `fix_c`, or
        ``'fix_b_witness'`` for the pair of `fix_b` with the time of
        `fix_b_witness`.

    Returns
    -------
    path : Path
        Path to the JSON instance file.
    """
    _check_type(name, (str,), "name")
    _check_value(name, _INSTANCES, "name")
    return Path(files("pyfiltrations.datasets") / "instances" / f"{name}.json")
