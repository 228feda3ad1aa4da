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

"""Run simulation experiments."""


# external libs
from cmdkit.app import ApplicationGroup

# internal libs
from ..common import Interface, exception_handlers
from . import convergence, trial_length


PROGRAM = 'navlearn experiment'
USAGE = f"""\
usage: {PROGRAM} [-h] <command> [<args>...]
{__doc__}\
"""

HELP = f"""\
{USAGE}

commands:
convergence              {convergence.__doc__}
trial-length             {trial_length.__doc__}

options:
-h, --help               Show this message and exit.

Use the -h/--help flag with the above commands to
learn more about their usage.\
"""


class ExperimentApp(ApplicationGroup):
    """Application class for experiment command group."""

    interface = Interface(PROGRAM, USAGE, HELP)
    interface.add_argument('command')

    exceptions = {**ApplicationGroup.exceptions, **exception_handlers()}

    command = None
    commands = {'convergence': convergence.ConvergenceApp,
                'trial-length': trial_length.TrialLengthApp,
                }
