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

"""Analyze reducibility and necessary conditions of a task."""


# type annotations
from __future__ import annotations
from typing import List, Tuple

# standard libs
import sys
import logging

# internal libs
from ...core.logging import cli_setup
from ...core.output import write_outputs
from ...task import Task, StateSet, dump_policy, goal_states
from ...analysis import goal_layers, check_necessary_conditions, reducing_policy
from .common import Interface, exception_handlers, read_task

# external libs
import pandas as pd
from cmdkit.app import Application
from rich.console import Console
from rich.table import Table


PROGRAM = 'navlearn analyze'
USAGE = f"""\
usage: {PROGRAM} [-h] --task FILE [--out FILE] [--policy-out FILE] [--debug | --verbose]
{__doc__}\
"""

HELP = f"""\
{USAGE}

options:
-t, --task        FILE   Path to task file.
-o, --out         FILE   Write per-state CSV to FILE.
    --policy-out  FILE   Write the reducing policy to FILE.
-d, --debug              Show debugging messages.
-v, --verbose            Show information messages.
-h, --help               Show this message and exit.\
"""


# application logger
log = logging.getLogger('navlearn')


def _names(states: StateSet) -> str:
    return ' '.join(states) if states else '-'


def _flag(value: bool) -> str:
    return 'true' if value else 'false'


def report_lines(task: Task) -> List[Tuple[str, str]]:
    """The analysis report as (label, value) pairs."""
    report = check_necessary_conditions(task)
    layers = goal_layers(task)
    return [
        ('states', str(len(task.states))),
        ('goal states', _names(goal_states(task))),
        ('states reducible', 'all' if report.is_reducible else _names(layers.fixpoint)),
        ('reducibility layers', str(layers.fixpoint_index)),
        ('unstable states', _names(report.unstable)),
        ('border states', _names(report.border)),
        ('reachable states', _names(report.reachable_states)),
        ('states without path to goals', _names(report.states_without_path_to_goals)),
        ('reachable states have a path to goals', _flag(report.property_a_holds)),
        ('start states reducible', _flag(report.start_states_reducible)),
    ]


def state_frame(task: Task) -> pd.DataFrame:
    """Per-state table of reducibility membership and layer index."""
    layers = goal_layers(task)
    report = check_necessary_conditions(task)
    frame = pd.DataFrame({
        'state': list(task.states),
        'in_reduce': [q in layers.fixpoint for q in task.states],
        'in_unstable': [q in report.unstable for q in task.states],
        'in_border': [q in report.border for q in task.states],
        'reducibility_layer_index': pd.array([layers.layer_of(q) for q in task.states], dtype='Int64'),
    })
    return frame


class AnalyzeApp(Application):
    """Application class for analyze command."""

    interface = Interface(PROGRAM, USAGE, HELP)

    task_path: str = None
    interface.add_argument('-t', '--task', dest='task_path', required=True)

    out_path: str = None
    interface.add_argument('-o', '--out', dest='out_path', default=out_path)

    policy_path: str = None
    interface.add_argument('--policy-out', dest='policy_path', default=policy_path)

    debug: bool = False
    verbose: bool = False
    logging_interface = interface.add_mutually_exclusive_group()
    logging_interface.add_argument('-d', '--debug', action='store_true')
    logging_interface.add_argument('-v', '--verbose', action='store_true')

    exceptions = exception_handlers()

    def run(self) -> None:
        """Business logic for `navlearn analyze`."""
        task = read_task(self.task_path)
        lines = report_lines(task)
        outputs = []
        if self.out_path is not None:
            outputs.append((self.out_path, state_frame(task).to_csv(index=False)))
        if self.policy_path is not None:
            outputs.append((self.policy_path, dump_policy(reducing_policy(task))))
        write_outputs(outputs)
        self.print_report(lines)

    @staticmethod
    def print_report(lines: List[Tuple[str, str]]) -> None:
        """Print the report as a table on a terminal, plain text otherwise."""
        if sys.stdout.isatty():
            table = Table(title=None, show_header=False)
            table.add_column('property', justify='left', style='cyan')
            table.add_column('value', justify='left')
            for label, value in lines:
                table.add_row(label, value)
            Console().print(table)
            Console().print('note: the last two conditions are necessary, not sufficient, for learnability')
        else:
            for label, value in lines:
                print(f'{label}: {value}')
            print('note: the last two conditions are necessary, not sufficient, for learnability')

    def __enter__(self) -> AnalyzeApp:
        """Initialize resources."""
        cli_setup(self)
        return self

    def __exit__(self, *exc) -> None:
        """Release resources."""
