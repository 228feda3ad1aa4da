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

"""Quantile of the convergence-trial index against task size."""


# type annotations
from __future__ import annotations

# standard libs
import logging

# internal libs
from ....core.logging import cli_setup
from ....core.exceptions import NoConvergence
from ....experiments import FAMILIES, convergence_index_experiment
from ..common import Interface, exception_handlers, parse_sizes, option, check_positive

# external libs
from cmdkit.app import Application


PROGRAM = 'navlearn experiment convergence'
PADDING = ' ' * len(PROGRAM)
USAGE = f"""\
usage: {PROGRAM} [-h] --family NAME --sizes RANGE [--runs NUM] [--p LEVEL]
       {PADDING} [--seed NUM] [--jobs NUM] [--step-cap NUM] [--trial-cap NUM]
       {PADDING} [--out FILE] [--meta FILE] [--debug | --verbose]
{__doc__}\
"""

HELP = f"""\
{USAGE}

For every size, simulates independent runs with a random initial policy and
random scheduler and reports the quantile of their convergence-trial index.
Runs without convergence count as failures and are left out of the quantile;
the table is still written and the command exits with status 3.
The output does not depend on --jobs.

options:
-f, --family     NAME    One of {', '.join(FAMILIES)}.
-s, --sizes      RANGE   Inclusive range (e.g., 2..10) or list (e.g., 2,4,8).
-n, --runs       NUM     Runs per size (default: configured).
-p, --p          LEVEL   Quantile level (default: configured).
    --seed       NUM     Master seed (default: configured).
-j, --jobs       NUM     Number of worker processes (default: configured).
    --step-cap   NUM     Transitions per trial before truncation.
    --trial-cap  NUM     Trials per run before giving up.
-o, --out        FILE    Write CSV to FILE (default: stdout).
    --meta       FILE    Write experiment metadata (TOML) to FILE.
-d, --debug              Show debugging messages.
-v, --verbose            Show information messages.
-h, --help               Show this message and exit.\
"""


# application logger
log = logging.getLogger('navlearn')


class ConvergenceApp(Application):
    """Application class for experiment convergence command."""

    interface = Interface(PROGRAM, USAGE, HELP)

    family: str = None
    interface.add_argument('-f', '--family', choices=list(FAMILIES), required=True)

    sizes: str = None
    interface.add_argument('-s', '--sizes', required=True)

    runs: int = None
    interface.add_argument('-n', '--runs', type=int, default=runs)

    p: float = None
    interface.add_argument('-p', '--p', type=float, default=p)

    seed: int = None
    interface.add_argument('--seed', type=int, default=seed)

    jobs: int = None
    interface.add_argument('-j', '--jobs', type=int, default=jobs)

    step_cap: int = None
    interface.add_argument('--step-cap', type=int, default=step_cap)

    trial_cap: int = None
    interface.add_argument('--trial-cap', type=int, default=trial_cap)

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
        """Business logic for `navlearn experiment convergence`."""
        table = convergence_index_experiment(
            self.family, parse_sizes(self.sizes),
            runs_per_size=check_positive('runs', option(self.runs, 'experiment', 'runs')),
            p=option(self.p, 'experiment', 'p', float),
            master_seed=option(self.seed, 'experiment', 'seed'),
            step_cap=check_positive('step cap', option(self.step_cap, 'engine', 'step_cap')),
            trial_cap=check_positive('trial cap', option(self.trial_cap, 'engine', 'trial_cap')),
            jobs=check_positive('jobs', option(self.jobs, 'experiment', 'jobs')))
        table.to_csv(self.out_path)
        if self.meta_path is not None:
            table.write_metadata(self.meta_path)
        failures = table.metadata['failures']
        if failures:
            raise NoConvergence(f'{failures} runs stopped at their caps without convergence')

    def __enter__(self) -> ConvergenceApp:
        """Initialize resources."""
        cli_setup(self)
        return self

    def __exit__(self, *exc) -> None:
        """Release resources."""
