"""Typing aliases for pyfiltrations.

Short-cut types re-grouping the representations used across the package.
"""

from fractions import Fraction
from typing import Union

from numpy.typing import NDArray

# exact rationals are fractions.Fraction; vectors over outcomes and processes are
# numpy arrays of dtype=object holding fractions
Rational = Fraction
RationalLike = Union[Fraction, int, str]
Vector = NDArray[object]
Process = NDArray[object]
TimeValue = Union[int, float]
