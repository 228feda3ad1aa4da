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

"""Unit tests for the simulation experiments."""


# external libs
import pytest

# internal libs
from navlearn.task import Task
from navlearn.experiments import (QuantileError, map_units, build_task, convergence_index_experiment,
                                  trial_length_experiment)
from navlearn.experiments.convergence_index import convergence_unit
from navlearn.generators import chain_task


class TestMapUnits:
    """Unit tests for map_units."""

    def test_serial(self) -> None:
        """Results keep the order of units."""
        assert map_units(abs, [-3, 2, -1]) == [3, 2, 1]

    def test_parallel(self) -> None:
        """A process pool gives the same ordered results."""
        units = list(range(-20, 20))
        assert map_units(abs, units, jobs=2) == [abs(u) for u in units]

    def test_jobs_positive(self) -> None:
        """At least one job."""
        with pytest.raises(ValueError):
            map_units(abs, [1], jobs=0)


class TestConvergenceIndexExperiment:
    """Unit tests for convergence_index_experiment."""

    def test_single_run(self) -> None:
        """With one run the quantile is that run's convergence index."""
        table = convergence_index_experiment('chain', [2], runs_per_size=1, p=0.9, master_seed=3)
        index, reason = convergence_unit(('chain', 2, 0, 3, 1_000_000, 100_000))
        assert reason == 'converged'
        assert list(table.frame.columns) == ['size', 'quantile', 'runs', 'failures']
        assert table.values[0] == index
        assert table.frame['failures'][0] == 0

    def test_sizes_sorted(self) -> None:
        """Sizes are deduplicated and increasing."""
        table = convergence_index_experiment('corridor', [2, 1, 2], runs_per_size=3)
        assert list(table.parameters) == [1, 2]
        assert table.metadata['sizes'] == [1, 2]

    def test_jobs_do_not_change_output(self) -> None:
        """Parallel execution reproduces the serial table."""
        serial = convergence_index_experiment('chain', [1, 2, 3], runs_per_size=4, master_seed=11)
        parallel = convergence_index_experiment('chain', [1, 2, 3], runs_per_size=4, master_seed=11, jobs=2)
        assert serial.frame.equals(parallel.frame)

    def test_failures(self) -> None:
        """Runs that hit the trial cap are counted and left out."""
        table = convergence_index_experiment('chain', [6], runs_per_size=3, trial_cap=1)
        assert table.frame['failures'][0] == 3
        assert table.frame['quantile'].isna().all()
        assert table.metadata['failures'] == 3

    def test_unknown_family(self) -> None:
        """Only known families."""
        with pytest.raises(ValueError):
            convergence_index_experiment('maze', [1], runs_per_size=1)
        with pytest.raises(ValueError):
            build_task('maze', 1)

    def test_bad_level(self) -> None:
        """The level is checked before any run."""
        with pytest.raises(QuantileError):
            convergence_index_experiment('chain', [1], runs_per_size=1, p=1.0)


class TestTrialLengthExperiment:
    """Unit tests for trial_length_experiment."""

    def test_single_state(self, single_state: Task) -> None:
        """Every trial of a one-state task has length one."""
        table = trial_length_experiment(single_state, runs=1, trials_per_run=3)
        assert list(table.frame.columns) == ['trial_index', 'length_quantile']
        assert list(table.parameters) == [1, 2, 3]
        assert list(table.values) == [1, 1, 1]

    def test_lengths_bounded_after_learning(self) -> None:
        """Late trials on a chain are short."""
        task = chain_task(3)
        table = trial_length_experiment(task, runs=10, trials_per_run=200, master_seed=2)
        assert all(value <= len(task.states) for value in table.values[150:])

    def test_jobs_do_not_change_output(self, ladder: Task) -> None:
        """Parallel execution reproduces the serial table."""
        serial = trial_length_experiment(ladder, runs=6, trials_per_run=20, master_seed=4)
        parallel = trial_length_experiment(ladder, runs=6, trials_per_run=20, master_seed=4, jobs=2)
        assert serial.frame.equals(parallel.frame)
