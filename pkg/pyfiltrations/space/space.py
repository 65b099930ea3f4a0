"""Finite probability spaces with exact rational probabilities."""

from fractions import Fraction
from typing import Sequence

import numpy as np

from .._typing import Vector
from ..utils._checks import _check_type, _ensure_int
from .process import _as_fraction, as_vector


class SampleSpace:
    """Finite sample space ``{0, ..., n - 1}`` with strictly positive probabilities.

    Parameters
    ----------
    probs : array-like of shape (n,)
        Probability of each outcome, as int, Fraction or ``'p/q'`` strings. Every
        probability must be strictly positive and they must sum exactly to 1.
    """

    __slots__ = ("_probs",)

    def __init__(self, probs: Sequence):
        _check_type(probs, ("array-like",), "probs")
        if len(probs) == 0:
            raise ValueError("Argument 'probs' must contain at least one outcome.")
        probs = tuple(_as_fraction(p, "probs") for p in probs)
        for k, p in enumerate(probs):
            if p <= 0:
                raise ValueError(
                    "Argument 'probs' must contain strictly positive probabilities. "
                    f"Outcome {k} has probability {p}."
                )
        total = sum(probs, Fraction(0))
        if total != 1:
            raise ValueError(
                f"Argument 'probs' must sum exactly to 1. Provided sum: {total}."
            )
        self._probs = probs

    @classmethod
    def uniform(cls, n: int) -> "SampleSpace":
        """Sample space with ``n`` equally likely outcomes."""
        n = _ensure_int(n, "n")
        if n <= 0:
            raise ValueError(
                f"Argument 'n' must be a positive integer. Provided: '{n}'."
            )
        return cls([Fraction(1, n)] * n)

    def __repr__(self) -> str:
        return f"<SampleSpace | n = {self.n}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SampleSpace):
            return NotImplemented
        return self._probs == other._probs

    def __hash__(self) -> int:
        return hash(self._probs)

    def prob(self, outcomes) -> Fraction:
        """Probability of a set of outcomes."""
        return sum((self._probs[k] for k in outcomes), Fraction(0))

    def expectation(self, x) -> Fraction:
        """Exact expectation of a vector over outcomes."""
        x = as_vector(x, self.n)
        return sum((p * v for p, v in zip(self._probs, x)), Fraction(0))

    @property
    def n(self) -> int:
        """Number of outcomes.

        :type: `int`
        """
        return len(self._probs)

    @property
    def probs(self) -> Vector:
        """Probabilities of the outcomes.

        :type: `~numpy.array` of shape ``(n,)`` and dtype object
        """
        return np.array(self._probs, dtype=object)
