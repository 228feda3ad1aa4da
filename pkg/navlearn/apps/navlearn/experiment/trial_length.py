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

"""Quantile of the trial length against the trial index."""


# type annotations
from __future__ import annotations

# standard libs
import logging

# internal libs
from ....core.logging import cli_setup
from ....core.exceptions import NoConvergence
from ....experiments import trial_length_experiment
from ..common import UsageError, Interface, exception_handlers, read_task, option, check_positive

# external libs
from cmdkit.app import Application


PROGRAM = 'navlearn experiment trial-length'
PADDING = ' ' * len(PROGRAM)
USAGE = f"""\
usage: {PROGRAM} [-h] --task FILE [--runs NUM] [--trials NUM] [--p LEVEL]
       {PADDING} [--seed NUM] [--skip-first NUM] [--jobs NUM] [--step-cap NUM]
       {PADDING} [--out FILE] [--meta FILE] [--debug | --verbose]
{__doc__}\
"""

HELP = f"""\
{USAGE}

Every run continues for exactly --trials trials regardless of convergence.
Runs with a truncated trial count as failures and are left out; the table is
still written and the command exits with status 3.

options:
-t, --task        FILE    Path to task file.
-n, --runs        NUM     Number of runs (default: configured).
    --trials      NUM     Trials per run (default: 2000).
-p, --p           LEVEL   Quantile level (default: configured).
    --seed        NUM     Master seed (default: configured).
    --skip-first  NUM     Leave out the first NUM trial indexes (default: 0).
-j, --jobs        NUM     Number of worker processes (default: configured).
    --step-cap    NUM     Transitions per trial before truncation.
-o, --out         FILE    Write CSV to FILE (default: stdout).
    --meta        FILE    Write experiment metadata (TOML) to FILE.
-d, --debug               Show debugging messages.
-v, --verbose             Show information messages.
-h, --help                Show this message and exit.\
"""


# application logger
log = logging.getLogger('navlearn')


class TrialLengthApp(Application):
    """Application class for experiment trial-length command."""

    interface = Interface(PROGRAM, USAGE, HELP)

    task_path: str = None
    interface.add_argument('-t', '--task', dest='task_path', required=True)

    runs: int = None
    interface.add_argument('-n', '--runs', type=int, default=runs)

    trials: int = 2000
    interface.add_argument('--trials', type=int, default=trials)

    p: float = None
    interface.add_argument('-p', '--p', type=float, default=p)

    seed: int = None
    interface.add_argument('--seed', type=int, default=seed)

    skip_first: int = 0
    interface.add_argument('--skip-first', type=int, default=skip_first)

    jobs: int = None
    interface.add_argument('-j', '--jobs', type=int, default=jobs)

    step_cap: int = None
    interface.add_argument('--step-cap', type=int, default=step_cap)

    out_path: str = None
    interface.add_argument('-o', '--out', dest='out_path', default=out_path)

    meta_path: str = None
    interface.add_argument('--meta', dest='meta_path', default=meta_path)

    debug: bool = False
    verbose: bool = False
    logging_interface = interface.add_mutually_exclusive_group()
    logging_interface.add_argument('-d', '--debug', action='store_true')
    logging_interface.add_argument('-v', '--verbose', action='store_true')

    exceptions = exception_handlers(convergence=True)

    def run(self) -> None:
        """Business logic for `navlearn experiment trial-length`."""
        if self.skip_first < 0:
            raise UsageError(f'cannot skip a negative number of trials ({self.skip_first})')
        task = read_task(self.task_path)
        table = trial_length_experiment(
            task,
            runs=check_positive('runs', option(self.runs, 'experiment', 'runs')),
            trials_per_run=check_positive('trials', self.trials),
            p=option(self.p, 'experiment', 'p', float),
            master_seed=option(self.seed, 'experiment', 'seed'),
            step_cap=check_positive('step cap', option(self.step_cap, 'engine', 'step_cap')),
            jobs=check_positive('jobs', option(self.jobs, 'experiment', 'jobs')))
        table = table.skip(self.skip_first)
        table.to_csv(self.out_path)
        if self.meta_path is not None:
            table.write_metadata(self.meta_path)
        failures = table.metadata['failures']
        if failures:
            raise NoConvergence(f'{failures} runs truncated at the step cap')

    def __enter__(self) -> TrialLengthApp:
        """Initialize resources."""
        cli_setup(self)
        return self

    def __exit__(self, *exc) -> None:
        """Release resources."""
