# Copyright Navlearn Developers 2026. All rights reserved.
#
# This program is free software: you can redistribute it and/or modify it under the
# terms of the Apache License (v2.0) as published by the Apache Software Foundation.
#
# This program is distributed in the hope that it will be useful, but WITHOUT ANY
# WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A
# PARTICULAR PURPOSE. See the Apache License for more details.
#
# You should have received a copy of the Apache License along with this program.
# If not, see <https://www.apache.org/licenses/LICENSE-2.0>.

"""Order-statistic (type 1) quantile."""


# type annotations
from typing import Sequence, Union

# standard libs
from fractions import Fraction

# external libs
import numpy as np

# public interface
__all__ = ['QuantileError', 'check_level', 'quantile', ]


Number = Union[int, float]


class QuantileError(ValueError):
    """Invalid quantile input."""


def check_level(p: float) -> float:
    """Raise QuantileError unless 0 < `p` < 1."""
    if not 0 < p < 1:
        raise QuantileError(f'quantile level must be strictly between 0 and 1 (given {p})')
    return p


def quantile(values: Sequence[Number], p: float) -> Number:
    """
    Type-1 quantile of `values` at level `p`, always an element of `values`.

    With n values sorted ascending and j = floor(p*n), the result is the
    (j+1)-th smallest value if p*n has a fractional part, else the j-th.
    The level is taken at its decimal value so that 0.9 * 10 is exactly 9.

    Arguments
    ---------
    values: Sequence[Number]
        Nonempty list of numbers (duplicates allowed).
    p: float
        Level strictly between 0 and 1.
    """
    if len(values) == 0:
        raise QuantileError('quantile of an empty list')
    check_level(p)
    ordered = np.sort(np.asarray(values))
    n = len(ordered)
    position = Fraction(str(p)) * n
    j = int(position)  # floor, position > 0
    k = j + 1 if position > j else j
    value = ordered[k - 1]
    return value.item() if hasattr(value, 'item') else value
