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

"""Generate task files."""


# external libs
from cmdkit.app import ApplicationGroup

# internal libs
from ..common import Interface, exception_handlers
from . import corridor, chain, grid


PROGRAM = 'navlearn gen'
USAGE = f"""\
usage: {PROGRAM} [-h] <command> [<args>...]
{__doc__}\
"""

HELP = f"""\
{USAGE}

commands:
corridor                 {corridor.__doc__}
chain                    {chain.__doc__}
grid                     {grid.__doc__}

options:
-h, --help               Show this message and exit.

Use the -h/--help flag with the above commands to
learn more about their usage.\
"""


class GenApp(ApplicationGroup):
    """Application class for gen command group."""

    interface = Interface(PROGRAM, USAGE, HELP)
    interface.add_argument('command')

    exceptions = {**ApplicationGroup.exceptions, **exception_handlers()}

    command = None
    commands = {'corridor': corridor.CorridorApp,
                'chain': chain.ChainApp,
                'grid': grid.GridApp,
                }
