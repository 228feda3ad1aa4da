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

"""Distribute independent units of work over worker processes."""


# type annotations
from typing import List, Callable, Iterable, TypeVar

# standard libs
import logging
from concurrent.futures import ProcessPoolExecutor

# public interface
__all__ = ['map_units', ]


# initialize module level logger
log = logging.getLogger(__name__)


Unit = TypeVar('Unit')
Result = TypeVar('Result')


def map_units(function: Callable[[Unit], Result], units: Iterable[Unit], jobs: int = 1) -> List[Result]:
    """
    Apply `function` to every unit, in order.

    With `jobs` > 1 the units run in a process pool; results are still
    returned in the order of `units`. The function must be defined at module level.
    """
    units = list(units)
    if jobs < 1:
        raise ValueError(f'jobs must be positive (given {jobs})')
    if jobs == 1 or len(units) < 2:
        return [function(unit) for unit in units]
    log.debug(f'Running {len(units)} units with {jobs} processes')
    chunksize = max(1, len(units) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(function, units, chunksize=chunksize))
