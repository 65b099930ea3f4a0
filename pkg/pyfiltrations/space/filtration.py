"""Filtrations as sequences of refining partitions."""

from typing import Iterator, Sequence

from ..utils._checks import _check_type, _ensure_int
from ..utils._docs import fill_doc
from .partition import Partition, refines
from .space import SampleSpace


@fill_doc
class Filtration:
    """Filtration on a finite sample space, indexed by ``t = 0..T``.

    Each time ``t`` carries a partition; the partition at ``t + 1`` refines the one
    at ``t``. The last partition stands for the terminal sigma-algebra, which also
    plays the role of the sigma-algebra at infinity.

    Parameters
    ----------
    parts : list of Partition
        ``T + 1`` partitions of the outcomes of ``space``. Lists of blocks are
        accepted and converted to `~pyfiltrations.space.Partition`.
    %(space)s
    """

    __slots__ = ("_parts", "_space")

    def __init__(self, parts: Sequence, space: SampleSpace):
        _check_type(space, (SampleSpace,), "space")
        _check_type(parts, ("array-like",), "parts")
        if len(parts) == 0:
            raise ValueError(
                "Argument 'parts' must contain at least one partition (horizon 0)."
            )
        parts = tuple(
            part if isinstance(part, Partition) else Partition(part, n=space.n)
            for part in parts
        )
        for t, part in enumerate(parts):
            if part.n != space.n:
                raise ValueError(
                    f"The partition at t={t} is defined on {part.n} outcomes while "
                    f"the sample space has {space.n} outcomes."
                )
            if 0 < t and not refines(part, parts[t - 1]):
                raise ValueError(
                    f"The partition at t={t} does not refine the partition at "
                    f"t={t - 1}."
                )
        self._parts = parts
        self._space = space

    @classmethod
    def trivial(cls, space: SampleSpace, horizon: int) -> "Filtration":
        """Filtration carrying no information at any time."""
        horizon = _ensure_int(horizon, "horizon")
        return cls([Partition.trivial(space.n)] * (horizon + 1), space)

    @classmethod
    def discrete(cls, space: SampleSpace, horizon: int) -> "Filtration":
        """Filtration revealing the outcome at time 0."""
        horizon = _ensure_int(horizon, "horizon")
        return cls([Partition.discrete(space.n)] * (horizon + 1), space)

    def __repr__(self) -> str:
        sizes = ", ".join(str(len(part)) for part in self._parts)
        return f"<Filtration | T = {self.horizon} | blocks per time: {sizes}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Filtration):
            return NotImplemented
        return self._space == other._space and self._parts == other._parts

    def __hash__(self) -> int:
        return hash((self._space, self._parts))

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._parts)

    def __getitem__(self, t: int) -> Partition:
        return self._parts[t]

    def children(self, t: int, block: Sequence[int]) -> tuple:
        """Blocks of the partition at ``t + 1`` contained in a block at ``t``."""
        labels = self._parts[t].labels
        label = labels[block[0]]
        return tuple(child for child in self._parts[t + 1] if labels[child[0]] == label)

    @property
    def parts(self) -> tuple:
        """Partitions at ``t = 0..T``.

        :type: `tuple` of `~pyfiltrations.space.Partition`
        """
        return self._parts

    @property
    def horizon(self) -> int:
        """Horizon ``T``.

        :type: `int`
        """
        return len(self._parts) - 1

    @property
    def space(self) -> SampleSpace:
        """Sample space the filtration is defined on.

        :type: `~pyfiltrations.space.SampleSpace`
        """
        return self._space

    @property
    def n(self) -> int:
        """Number of outcomes.

        :type: `int`
        """
        return self._space.n


@fill_doc
class FilteredPair:
    """Sample space with two nested filtrations ``F ⊂ G``.

    Parameters
    ----------
    %(space)s
    F : Filtration
        Smaller filtration.
    G : Filtration
        Larger filtration; ``G[t]`` must refine ``F[t]`` at every time.
    """

    __slots__ = ("_space", "_F", "_G")

    def __init__(self, space: SampleSpace, F: Filtration, G: Filtration):
        _check_type(space, (SampleSpace,), "space")
        _check_type(F, (Filtration,), "F")
        _check_type(G, (Filtration,), "G")
        if F.space != space or G.space != space:
            raise ValueError(
                "Arguments 'F' and 'G' must be defined on the provided sample space."
            )
        if F.horizon != G.horizon:
            raise ValueError(
                "Arguments 'F' and 'G' must share the same horizon. "
                f"Provided: {F.horizon} and {G.horizon}."
            )
        for t in range(F.horizon + 1):
            if not refines(G[t], F[t]):
                raise ValueError(
                    f"The partition of 'G' at t={t} does not refine the partition "
                    f"of 'F' at t={t}."
                )
        self._space = space
        self._F = F
        self._G = G

    def __repr__(self) -> str:
        return f"<FilteredPair | n = {self._space.n} | T = {self.horizon}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FilteredPair):
            return NotImplemented
        return self._F == other._F and self._G == other._G

    def __hash__(self) -> int:
        return hash((self._F, self._G))

    @property
    def space(self) -> SampleSpace:
        """Sample space.

        :type: `~pyfiltrations.space.SampleSpace`
        """
        return self._space

    @property
    def F(self) -> Filtration:
        """Smaller filtration.

        :type: `~pyfiltrations.space.Filtration`
        """
        return self._F

    @property
    def G(self) -> Filtration:
        """Larger filtration.

        :type: `~pyfiltrations.space.Filtration`
        """
        return self._G

    @property
    def horizon(self) -> int:
        """Common horizon ``T``.

        :type: `int`
        """
        return self._F.horizon
