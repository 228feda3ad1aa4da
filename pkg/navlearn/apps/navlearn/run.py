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

"""Simulate a learning run until convergence."""


# type annotations
from __future__ import annotations

# standard libs
import logging

# internal libs
from ...core.logging import cli_setup
from ...core.output import write_outputs
from ...core.exceptions import NoConvergence
from ...task import load_policy, dump_policy
from ...engine import (SCHEDULERS, RunRecord, make_scheduler, load_script, run_until_convergence,
                       random_policy, run_seeds)
from .common import UsageError, Interface, exception_handlers, read_task, option, check_positive

# external libs
import pandas as pd
from cmdkit.app import Application


PROGRAM = 'navlearn run'
PADDING = ' ' * len(PROGRAM)
USAGE = f"""\
usage: {PROGRAM} [-h] --task FILE [--scheduler NAME] [--script FILE] [--policy FILE]
       {PADDING} [--seed NUM] [--step-cap NUM] [--trial-cap NUM] [--out FILE]
       {PADDING} [--policy-out FILE] [--debug | --verbose]
{__doc__}\
"""

HELP = f"""\
{USAGE}

Trials start from the start states in turn, reusing the policy. The run
stops at the first trial whose end policy passes the final-policy test.
Exits with status 3 if the caps are reached first.

options:
-t, --task        FILE   Path to task file.
-s, --scheduler   NAME   One of {', '.join(SCHEDULERS)} (default: configured).
    --script      FILE   Options for the scripted scheduler (one `action state` per line, cycled).
    --policy      FILE   Initial policy (default: random per state).
    --seed        NUM    Seed for the initial policy and random scheduler (default: 0).
    --step-cap    NUM    Transitions per trial before truncation.
    --trial-cap   NUM    Trials before giving up.
-o, --out         FILE   Write per-trial CSV to FILE.
    --policy-out  FILE   Write the final (or last) policy to FILE.
-d, --debug              Show debugging messages.
-v, --verbose            Show information messages.
-h, --help               Show this message and exit.\
"""


# application logger
log = logging.getLogger('navlearn')


def trial_frame(run: RunRecord) -> pd.DataFrame:
    """Per-trial table of a run."""
    return pd.DataFrame({
        'trial_index': range(1, len(run.trials) + 1),
        'start_state': [trial.start_state for trial in run.trials],
        'length': [trial.length for trial in run.trials],
        'terminated_with_reward': [trial.terminated_with_reward for trial in run.trials],
        'policy_changed': [trial.policy_changed for trial in run.trials],
        'converged_here': [i == run.convergence_trial_index for i in range(1, len(run.trials) + 1)],
    }, columns=['trial_index', 'start_state', 'length', 'terminated_with_reward',
                'policy_changed', 'converged_here'])


class RunApp(Application):
    """Application class for run command."""

    interface = Interface(PROGRAM, USAGE, HELP)

    task_path: str = None
    interface.add_argument('-t', '--task', dest='task_path', required=True)

    scheduler: str = None
    interface.add_argument('-s', '--scheduler', choices=SCHEDULERS, default=scheduler)

    script_path: str = None
    interface.add_argument('--script', dest='script_path', default=script_path)

    policy_path: str = None
    interface.add_argument('--policy', dest='policy_path', default=policy_path)

    seed: int = 0
    interface.add_argument('--seed', type=int, default=seed)

    step_cap: int = None
    interface.add_argument('--step-cap', type=int, default=step_cap)

    trial_cap: int = None
    interface.add_argument('--trial-cap', type=int, default=trial_cap)

    out_path: str = None
    interface.add_argument('-o', '--out', dest='out_path', default=out_path)

    policy_out_path: str = None
    interface.add_argument('--policy-out', dest='policy_out_path', default=policy_out_path)

    debug: bool = False
    verbose: bool = False
    logging_interface = interface.add_mutually_exclusive_group()
    logging_interface.add_argument('-d', '--debug', action='store_true')
    logging_interface.add_argument('-v', '--verbose', action='store_true')

    exceptions = exception_handlers(convergence=True)

    def run(self) -> None:
        """Business logic for `navlearn run`."""
        kind = option(self.scheduler, 'engine', 'scheduler', str)
        if kind not in SCHEDULERS:
            raise UsageError(f'unknown scheduler \'{kind}\'')
        if kind == 'scripted' and self.script_path is None:
            raise UsageError('--script is required with --scheduler scripted')
        if kind != 'scripted' and self.script_path is not None:
            raise UsageError('--script only applies to --scheduler scripted')
        step_cap = check_positive('step cap', option(self.step_cap, 'engine', 'step_cap'))
        trial_cap = check_positive('trial cap', option(self.trial_cap, 'engine', 'trial_cap'))

        task = read_task(self.task_path)
        policy_seed, scheduler_seed = run_seeds(self.seed)
        if self.policy_path is not None:
            policy = load_policy(task, self.policy_path)
        else:
            policy = random_policy(task, policy_seed)
        script = load_script(task, self.script_path) if kind == 'scripted' else None
        scheduler = make_scheduler(kind, seed=scheduler_seed, script=script, cycle=True)

        run = run_until_convergence(task, scheduler, policy, step_cap=step_cap, trial_cap=trial_cap)
        outputs = []
        if self.out_path is not None:
            outputs.append((self.out_path, trial_frame(run).to_csv(index=False)))
        if self.policy_out_path is not None:
            outputs.append((self.policy_out_path, dump_policy(run.last_policy)))
        write_outputs(outputs)
        if not run.converged:
            print(f'no convergence ({run.stop_reason.replace("_", " ")} after {len(run.trials)} trials)')
            raise NoConvergence(f'no convergence within caps (step cap {step_cap}, trial cap {trial_cap})')
        print(f'converged at trial {run.convergence_trial_index}')

    def __enter__(self) -> RunApp:
        """Initialize resources."""
        cli_setup(self)
        return self

    def __exit__(self, *exc) -> None:
        """Release resources."""
