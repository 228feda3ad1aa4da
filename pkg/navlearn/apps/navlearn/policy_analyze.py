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

"""Test whether a policy has the form of a final policy."""


# type annotations
from __future__ import annotations

# standard libs
import logging

# internal libs
from ...core.logging import cli_setup
from ...core.output import atomic_output
from ...task import Task, StateSet, load_policy
from ...convergence import PolicyAnalysis, analyze_policy, render_grid
from ...generators import grid_cells
from .common import Interface, exception_handlers, read_task

# external libs
import pandas as pd
from cmdkit.app import Application


PROGRAM = 'navlearn policy-analyze'
USAGE = f"""\
usage: {PROGRAM} [-h] --task FILE --policy FILE [--out FILE] [--render] [--debug | --verbose]
{__doc__}\
"""

HELP = f"""\
{USAGE}

The policy passes the final-policy form test if every state in its forward
set is also in its backward set. The test characterizes final policies on
tasks that are learnable under fairness; on other tasks it is reported as is.

options:
-t, --task        FILE   Path to task file.
-p, --policy      FILE   Path to policy file (one `state action` per line).
-o, --out         FILE   Write per-state CSV to FILE.
-r, --render             Draw the forward and backward sets (grid tasks only).
-d, --debug              Show debugging messages.
-v, --verbose            Show information messages.
-h, --help               Show this message and exit.\
"""


# application logger
log = logging.getLogger('navlearn')


def policy_frame(task: Task, analysis: PolicyAnalysis) -> pd.DataFrame:
    """Per-state membership in the ground, forward and backward sets."""
    gap = analysis.gap
    return pd.DataFrame({
        'state': list(task.states),
        'policy_action': [analysis.policy[q] for q in task.states],
        'in_ground': [q in analysis.ground for q in task.states],
        'in_forward': [q in analysis.forward for q in task.states],
        'in_backward': [q in analysis.backward for q in task.states],
        'in_gap': [q in gap for q in task.states],
    })


def _names(states: StateSet) -> str:
    return ' '.join(states) if states else '-'


class PolicyAnalyzeApp(Application):
    """Application class for policy-analyze command."""

    interface = Interface(PROGRAM, USAGE, HELP)

    task_path: str = None
    interface.add_argument('-t', '--task', dest='task_path', required=True)

    policy_path: str = None
    interface.add_argument('-p', '--policy', dest='policy_path', required=True)

    out_path: str = None
    interface.add_argument('-o', '--out', dest='out_path', default=out_path)

    render: bool = False
    interface.add_argument('-r', '--render', action='store_true')

    debug: bool = False
    verbose: bool = False
    logging_interface = interface.add_mutually_exclusive_group()
    logging_interface.add_argument('-d', '--debug', action='store_true')
    logging_interface.add_argument('-v', '--verbose', action='store_true')

    exceptions = exception_handlers()

    def run(self) -> None:
        """Business logic for `navlearn policy-analyze`."""
        task = read_task(self.task_path)
        policy = load_policy(task, self.policy_path)
        if self.render:
            grid_cells(task)  # not a grid task: fail before writing anything
        analysis = analyze_policy(task, policy)
        if self.out_path is not None:
            with atomic_output(self.out_path) as stream:
                policy_frame(task, analysis).to_csv(stream, index=False)
        print(f'ground: {_names(analysis.ground)}')
        print(f'forward: {_names(analysis.forward)}')
        print(f'backward: {_names(analysis.backward)}')
        print(f'forward not in backward: {_names(analysis.gap)}')
        print(f'final-policy form test: {"passed" if analysis.is_final else "failed"}')
        if self.render:
            print('\nforward:')
            print(render_grid(task, policy, analysis.forward), end='')
            print('\nbackward:')
            print(render_grid(task, policy, analysis.backward), end='')

    def __enter__(self) -> PolicyAnalyzeApp:
        """Initialize resources."""
        cli_setup(self)
        return self

    def __exit__(self, *exc) -> None:
        """Release resources."""
