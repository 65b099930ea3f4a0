"""Batched exact evaluation of stopping-time functionals.

A stopping time is handled through its codes, one integer per outcome with infinity
encoded as ``T + 1``. A functional linear in the indicators ``1{tau(k) = c}`` is a
table ``W[k, c]``; evaluating it on a batch of codes of shape ``(K, n)`` is a gather
followed by a sum over outcomes. Each row of the table is scaled by the lcm of its
denominators so that the gather runs on integers.
"""

import math
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from ..space.expectation import basis_martingales
from ..space.filtration import Filtration

_INT64_BOUND = 2**62


def _scale_rows(
    rows: List[NDArray[object]], targets: List[Fraction]
) -> Tuple[NDArray, NDArray, List[int]]:
    """Scale each table row and its target to integers.

    Returns the stacked table of shape (R, n, T + 2), the targets of shape (R,) and
    the scale of every row. The table is int64 when no sum can overflow.
    """
    scales = list()
    scaled_rows = list()
    scaled_targets = list()
    for row, target in zip(rows, targets):
        denominators = [Fraction(v).denominator for v in row.flat]
        scale = math.lcm(Fraction(target).denominator, *denominators)
        scales.append(scale)
        scaled_rows.append(
            np.array(
                [[int(Fraction(v) * scale) for v in line] for line in row], dtype=object
            )
        )
        scaled_targets.append(int(Fraction(target) * scale))
    table = np.array(scaled_rows, dtype=object)
    targets = np.array(scaled_targets, dtype=object)
    bound = max(
        max(sum(max(abs(v) for v in line) for line in row) for row in scaled_rows),
        max(abs(v) for v in scaled_targets),
    )
    if bound < _INT64_BOUND:
        table = table.astype(np.int64)
        targets = targets.astype(np.int64)
    return table, targets, scales


class _LinearCriterion:
    """Rows of linear functionals compared against their targets."""

    def __init__(self, table: NDArray, targets: NDArray, scales: List[int]):
        self._table = table
        self._targets = targets
        self._scales = scales

    def evaluate(self, codes: NDArray[int]) -> NDArray:
        """Scaled values of every row on a batch of codes, shape (R, K)."""
        n = self._table.shape[1]
        return self._table[:, np.arange(n), codes].sum(axis=2)

    def first_failure(self, codes: NDArray[int]) -> Optional[Tuple[int, int, Fraction]]:
        """First (code row, table row, value) where a row misses its target."""
        if codes.shape[0] == 0:
            return None
        values = self.evaluate(codes)
        mismatch = values != self._targets[:, np.newaxis]
        failing = np.flatnonzero(mismatch.any(axis=0))
        if failing.size == 0:
            return None
        k = int(failing[0])
        r = int(np.flatnonzero(mismatch[:, k])[0])
        return k, r, Fraction(int(values[r, k]), self._scales[r])

    def target(self, r: int) -> Fraction:
        return Fraction(int(self._targets[r]), self._scales[r])


class PseudoCriterion(_LinearCriterion):
    """Expectations ``E[M_tau]`` of the basis martingales of a filtration.

    Row ``j`` holds ``W[k, c] = p(k) M^j_{min(c, T)}(k)`` and targets ``E[M^j_0]``, so
    a stopping time is pseudo-stopping for ``F`` if and only if no row fails.
    """

    def __init__(self, F: Filtration):
        T, n = F.horizon, F.n
        probs = F.space.probs
        rows = list()
        targets = list()
        self.blocks = F[T].blocks
        for block, M in zip(self.blocks, basis_martingales(F)):
            row = np.empty((n, T + 2), dtype=object)
            for c in range(T + 2):
                row[:, c] = probs * M[min(c, T)]
            rows.append(row)
            targets.append(F.space.prob(block))
        super().__init__(*_scale_rows(rows, targets))


class GapCriterion(_LinearCriterion):
    """Differences ``oV_t - Vo_t`` for ``V = 1{tau <= t}`` and a filtration ``F``.

    Row ``(t, k)`` holds, for ``s = c <= t``,
    ``H[k', c] = 1{k' in C_t(k)} p(k') / P(C_t(k)) - 1{k' in C_s(k)} p(k') / P(C_s(k))``
    with ``C_t(k)`` the block of ``F[t]`` containing ``k``, and zero for ``c > t``.
    All targets are zero.
    """

    def __init__(self, F: Filtration):
        T, n = F.horizon, F.n
        probs = F.space.probs
        # weights[t][k, k'] = 1{k' in C_t(k)} p(k') / P(C_t(k))
        weights = list()
        for part in F:
            W = np.full((n, n), Fraction(0), dtype=object)
            for block in part:
                mass = sum(probs[list(block)])
                for k in block:
                    for kk in block:
                        W[k, kk] = probs[kk] / mass
            weights.append(W)
        rows = list()
        self.coordinates = list()
        for t in range(T + 1):
            for k in range(n):
                row = np.full((n, T + 2), Fraction(0), dtype=object)
                for s in range(t + 1):
                    row[:, s] = weights[t][k] - weights[s][k]
                rows.append(row)
                self.coordinates.append((t, k))
        super().__init__(*_scale_rows(rows, [Fraction(0)] * len(rows)))
