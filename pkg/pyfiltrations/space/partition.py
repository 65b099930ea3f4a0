"""Partitions of a finite set of outcomes."""

from typing import Iterable, Iterator, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from ..utils._checks import _check_type, _ensure_int


class Partition:
    """Partition of the outcomes ``{0, ..., n - 1}`` into disjoint nonempty blocks.

    A partition stands for the finite sigma-algebra it generates. Blocks are stored
    in canonical order: each block sorted, blocks sorted by their smallest outcome,
    so two partitions generating the same sigma-algebra compare equal.

    Parameters
    ----------
    blocks : list of list of int
        Disjoint nonempty sets of outcome indices covering ``{0, ..., n - 1}``.
    n : int | None
        Number of outcomes. If None, it is inferred from the blocks.
    """

    __slots__ = ("_blocks", "_n", "_labels")

    def __init__(self, blocks: Iterable[Iterable[int]], n=None):
        _check_type(blocks, ("array-like", set, frozenset, tuple), "blocks")
        blocks = [
            tuple(sorted(_ensure_int(k, "outcome") for k in block)) for block in blocks
        ]
        if any(len(block) == 0 for block in blocks):
            raise ValueError("Argument 'blocks' can not contain an empty block.")
        outcomes = [k for block in blocks for k in block]
        if n is None:
            n = max(outcomes) + 1 if len(outcomes) != 0 else 0
        n = _ensure_int(n, "n")
        if n <= 0:
            raise ValueError(
                f"Argument 'n' must be a positive integer. Provided: '{n}'."
            )
        if len(outcomes) != len(set(outcomes)):
            raise ValueError("The blocks of a partition must be pairwise disjoint.")
        if sorted(outcomes) != list(range(n)):
            raise ValueError(
                "The union of the blocks must be the set of outcomes "
                f"{{0, ..., {n - 1}}}."
            )
        self._blocks = tuple(sorted(blocks))
        self._n = n
        self._labels = np.empty(n, dtype=np.intp)
        for k, block in enumerate(self._blocks):
            self._labels[list(block)] = k
        self._labels.flags.writeable = False

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        """Build the partition into level sets of a label vector.

        Parameters
        ----------
        labels : array-like of shape (n,)
            Hashable label of each outcome. Outcomes sharing a label share a block.

        Returns
        -------
        partition : Partition
        """
        groups = dict()
        for k, label in enumerate(labels):
            groups.setdefault(label, []).append(k)
        return cls(list(groups.values()), n=len(labels))

    @classmethod
    def trivial(cls, n: int) -> "Partition":
        """Partition with the single block ``{0, ..., n - 1}``."""
        n = _ensure_int(n, "n")
        return cls([range(n)], n=n)

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        """Partition into singletons."""
        n = _ensure_int(n, "n")
        return cls([[k] for k in range(n)], n=n)

    def __repr__(self) -> str:
        blocks = ", ".join("{" + ", ".join(map(str, block)) + "}" for block in self)
        return f"<Partition | {blocks}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._n == other._n and self._blocks == other._blocks

    def __hash__(self) -> int:
        return hash((self._n, self._blocks))

    def __len__(self) -> int:
        return len(self._blocks)

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self._blocks)

    def __getitem__(self, k: int) -> Tuple[int, ...]:
        return self._blocks[k]

    def block_of(self, outcome: int) -> Tuple[int, ...]:
        """Return the block containing an outcome."""
        return self._blocks[self._labels[outcome]]

    def is_measurable(self, x: NDArray) -> bool:
        """Return True if the vector ``x`` is constant on every block."""
        x = np.asarray(x, dtype=object)
        return all(all(x[k] == x[block[0]] for k in block[1:]) for block in self)

    def join(self, other: "Partition") -> "Partition":
        """Common refinement of two partitions of the same outcomes."""
        _check_type(other, (Partition,), "other")
        if other.n != self._n:
            raise ValueError(
                "Partitions must be defined on the same number of outcomes. "
                f"Provided: {self._n} and {other.n}."
            )
        return Partition.from_labels(list(zip(self._labels, other.labels)))

    def restrict(self, outcomes: Iterable[int]) -> Tuple[Tuple[int, ...], ...]:
        """Blocks of the trace of the partition on a set of outcomes."""
        outcomes = set(outcomes)
        traces = (tuple(k for k in block if k in outcomes) for block in self)
        return tuple(trace for trace in traces if len(trace) != 0)

    # --------------------------------------------------------------------
    @property
    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        """Blocks in canonical order.

        :type: `tuple` of `tuple` of `int`
        """
        return self._blocks

    @property
    def n(self) -> int:
        """Number of outcomes.

        :type: `int`
        """
        return self._n

    @property
    def labels(self) -> NDArray[int]:
        """Index of the block of each outcome (read-only).

        :type: `~numpy.array` of shape ``(n,)``
        """
        return self._labels


def refines(fine: Partition, coarse: Partition) -> bool:
    """Check if a partition refines another.

    Parameters
    ----------
    fine : Partition
        Candidate finer partition.
    coarse : Partition
        Candidate coarser partition.

    Returns
    -------
    refines : bool
        True if every block of ``fine`` is contained in a block of ``coarse``.
    """
    _check_type(fine, (Partition,), "fine")
    _check_type(coarse, (Partition,), "coarse")
    if fine.n != coarse.n:
        raise ValueError(
            "Partitions must be defined on the same number of outcomes. "
            f"Provided: {fine.n} and {coarse.n}."
        )
    labels = coarse.labels
    return all(len({labels[k] for k in block}) == 1 for block in fine)
