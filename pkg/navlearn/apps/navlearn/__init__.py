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

"""Entry-point for navlearn command-line interface."""


# type annotations
from typing import List, Tuple, Optional, Type

# standard libs
import sys
import logging

# internal libs
from ...__meta__ import (__version__, __description__, __copyright__, __developer__, __ascii_art__)
from ...core.exceptions import exit_status
from .common import Interface, exception_handlers
from . import analyze, run, policy_analyze, gen, experiment

# external libs
from cmdkit.app import Application, ApplicationGroup


PROGRAM = 'navlearn'
USAGE = f"""\
usage: {PROGRAM} [-h] [-v] <command> [<args>...]
{__description__}\
"""

EPILOG = f"""\
Copyright {__copyright__}
{__developer__}\
"""

HELP = f"""\
{USAGE}

commands:
analyze                {analyze.__doc__}
run                    {run.__doc__}
policy-analyze         {policy_analyze.__doc__}
gen                    {gen.__doc__}
experiment             {experiment.__doc__}

options:
-h, --help             Show this message and exit.
-v, --version          Show the version and exit.

exit status:
0                      Success.
1                      Usage error.
2                      Bad task, policy or configuration.
3                      No convergence within caps.

Use the -h/--help flag with the above commands to
learn more about their usage.

{EPILOG}\
"""


# initialize application logger
log = logging.getLogger('navlearn')


# logging setup for command-line interface
Application.log_critical = log.critical
Application.log_exception = log.exception


class NavlearnApp(ApplicationGroup):
    """Top-level application class for navlearn."""

    interface = Interface(PROGRAM, USAGE, HELP)
    interface.add_argument('command')
    interface.add_argument('-v', '--version', action='version', version=__version__)
    interface.add_argument('--ascii-art', action='version', version=__ascii_art__)

    exceptions = {**ApplicationGroup.exceptions, **exception_handlers()}

    command = None
    commands = {'analyze': analyze.AnalyzeApp,
                'run': run.RunApp,
                'policy-analyze': policy_analyze.PolicyAnalyzeApp,
                'gen': gen.GenApp,
                'experiment': experiment.ExperimentApp,
                }


def unknown_command(group: Type[ApplicationGroup],
                    argv: List[str]) -> Optional[Tuple[str, Type[ApplicationGroup]]]:
    """The first command name in `argv` not known to `group` (or a nested group), if any."""
    if not argv or argv[0].startswith('-'):
        return None
    name, *remainder = argv
    if name not in group.commands:
        return name, group
    member = group.commands[name]
    if issubclass(member, ApplicationGroup):
        return unknown_command(member, remainder)
    return None


def dispatch(argv: List[str]) -> int:
    """
    Run the command named by `argv` and return its exit status.

    Unknown commands (at any level) and an empty argument list are usage
    errors, reported before any work starts.
    """
    argv = list(argv)
    if not argv:
        print(USAGE, file=sys.stderr)
        return exit_status.usage
    unknown = unknown_command(NavlearnApp, argv)
    if unknown is not None:
        name, group = unknown
        log.critical(f'"{name}" is not a command (expected one of {", ".join(group.commands)})')
        print(group.interface.usage_text, file=sys.stderr)
        return exit_status.usage
    return NavlearnApp.main(argv)


def main() -> int:
    """Entry-point for `navlearn` console application."""
    return dispatch(sys.argv[1:])
