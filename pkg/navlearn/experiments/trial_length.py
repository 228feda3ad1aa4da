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

"""Trial length against trial index."""


# type annotations
from typing import List, Tuple, Optional

# standard libs
import logging

# external libs
import numpy as np
import pandas as pd

# internal libs
from ..task import Task
from ..analysis import is_reducible
from ..engine import RandomScheduler, run_trials, random_policy, run_seeds, DEFAULT_STEP_CAP
from .quantile import quantile, check_level
from .table import ExperimentTable
from .pool import map_units

# public interface
__all__ = ['trial_length_experiment', ]


# initialize module level logger
log = logging.getLogger(__name__)


# task, run index, trials per run, master seed, step cap
TrialLengthUnit = Tuple[Task, int, int, int, int]


def trial_length_unit(unit: TrialLengthUnit) -> Optional[List[int]]:
    """Lengths of the trials of one seeded run (None if a trial was truncated)."""
    task, run_index, trials_per_run, master_seed, step_cap = unit
    policy_seed, scheduler_seed = run_seeds(master_seed, 0, run_index)
    trials = run_trials(task, RandomScheduler(scheduler_seed), random_policy(task, policy_seed),
                        count=trials_per_run, step_cap=step_cap)
    if trials[-1].truncated:
        return None
    return [trial.length for trial in trials]


def trial_length_experiment(task: Task, runs: int, trials_per_run: int, p: float = 0.9,
                            master_seed: int = 0, step_cap: int = DEFAULT_STEP_CAP,
                            jobs: int = 1) -> ExperimentTable:
    """
    Quantile over runs of the length of each trial index.

    Every run continues for exactly `trials_per_run` trials regardless of
    convergence. Runs with a truncated trial count as failures and are left out.
    """
    if runs < 1 or trials_per_run < 1:
        raise ValueError(f'runs and trials must be positive (given {runs}, {trials_per_run})')
    check_level(p)
    units = [(task, run_index, trials_per_run, master_seed, step_cap) for run_index in range(runs)]
    results = map_units(trial_length_unit, units, jobs=jobs)

    completed = [lengths for lengths in results if lengths is not None]
    failures = runs - len(completed)
    if failures:
        level = logging.ERROR if is_reducible(task) else logging.WARNING
        log.log(level, f'{failures} of {runs} runs truncated (step cap {step_cap}) and excluded')
    if completed:
        matrix = np.array(completed, dtype=np.int64)
        statistic = [quantile(matrix[:, i], p) for i in range(trials_per_run)]
    else:
        statistic = [None] * trials_per_run
    log.info(f'Computed {p}-quantile trial lengths over {len(completed)} runs')

    frame = pd.DataFrame({'trial_index': np.arange(1, trials_per_run + 1, dtype=np.int64),
                          'length_quantile': pd.array(statistic, dtype='Int64')})
    metadata = {'experiment': 'trial-length', 'states': len(task.states), 'runs': int(runs),
                'trials': int(trials_per_run), 'p': float(p), 'seed': int(master_seed),
                'step_cap': int(step_cap), 'failures': failures}
    return ExperimentTable(frame, parameter='trial_index', statistic='length_quantile', metadata=metadata)
