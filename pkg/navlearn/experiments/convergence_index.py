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

"""Convergence-trial index against task size."""


# type annotations
from typing import List, Tuple, Optional, Iterable

# standard libs
import logging
from functools import lru_cache

# external libs
import pandas as pd

# internal libs
from ..task import Task
from ..generators import corridor_task, chain_task
from ..engine import (RandomScheduler, run_until_convergence, random_policy, run_seeds,
                      DEFAULT_STEP_CAP, DEFAULT_TRIAL_CAP)
from .quantile import quantile, check_level
from .table import ExperimentTable
from .pool import map_units

# public interface
__all__ = ['FAMILIES', 'build_task', 'convergence_index_experiment', ]


# initialize module level logger
log = logging.getLogger(__name__)


FAMILIES = {'corridor': corridor_task, 'chain': chain_task, }


@lru_cache(maxsize=None)
def build_task(family: str, size: int) -> Task:
    """Task of the given `family` and `size` (cached per process)."""
    try:
        generator = FAMILIES[family]
    except KeyError as error:
        raise ValueError(f'unknown task family \'{family}\' (expected one of {", ".join(FAMILIES)})') from error
    return generator(size)


# family, size, run index, master seed, step cap, trial cap
ConvergenceUnit = Tuple[str, int, int, int, int, int]


def convergence_unit(unit: ConvergenceUnit) -> Tuple[Optional[int], str]:
    """Simulate one seeded run; returns its convergence index (None on failure) and stop reason."""
    family, size, run_index, master_seed, step_cap, trial_cap = unit
    task = build_task(family, size)
    policy_seed, scheduler_seed = run_seeds(master_seed, size, run_index)
    run = run_until_convergence(task, RandomScheduler(scheduler_seed), random_policy(task, policy_seed),
                                step_cap=step_cap, trial_cap=trial_cap)
    return run.convergence_trial_index, run.stop_reason


def convergence_index_experiment(family: str, sizes: Iterable[int], runs_per_size: int, p: float = 0.9,
                                 master_seed: int = 0, step_cap: int = DEFAULT_STEP_CAP,
                                 trial_cap: int = DEFAULT_TRIAL_CAP, jobs: int = 1) -> ExperimentTable:
    """
    Quantile of the convergence-trial index over `runs_per_size` random runs per size.

    Runs that stop without convergence count as failures and are left out of
    the quantile. Output does not depend on `jobs`.
    """
    sizes = sorted(set(int(size) for size in sizes))
    if not sizes:
        raise ValueError('no sizes given')
    if min(sizes) < 1:
        raise ValueError(f'sizes must be positive (given {min(sizes)})')
    if runs_per_size < 1:
        raise ValueError(f'runs per size must be positive (given {runs_per_size})')
    check_level(p)
    build_task(family, sizes[0])  # fail early on unknown family

    units = [(family, size, run_index, master_seed, step_cap, trial_cap)
             for size in sizes for run_index in range(runs_per_size)]
    results = map_units(convergence_unit, units, jobs=jobs)

    rows: List[dict] = []
    total_failures = 0
    for position, size in enumerate(sizes):
        outcome = results[position * runs_per_size:(position + 1) * runs_per_size]
        indices = [index for index, _ in outcome if index is not None]
        failures = len(outcome) - len(indices)
        for run_index, (index, reason) in enumerate(outcome):
            if index is None:
                log.error(f'No convergence for {family} size {size} run {run_index} ({reason})')
        total_failures += failures
        statistic = quantile(indices, p) if indices else None
        log.info(f'{family} size {size}: {p}-quantile {statistic} ({failures} failures)')
        rows.append({'size': size, 'quantile': statistic, 'runs': runs_per_size, 'failures': failures})

    frame = pd.DataFrame(rows, columns=['size', 'quantile', 'runs', 'failures'])
    frame = frame.astype({'size': 'int64', 'quantile': 'Int64', 'runs': 'int64', 'failures': 'int64'})
    metadata = {'experiment': 'convergence', 'family': family, 'sizes': sizes, 'runs': runs_per_size,
                'p': float(p), 'seed': int(master_seed), 'step_cap': int(step_cap),
                'trial_cap': int(trial_cap), 'failures': total_failures}
    return ExperimentTable(frame, parameter='size', statistic='quantile', metadata=metadata)
