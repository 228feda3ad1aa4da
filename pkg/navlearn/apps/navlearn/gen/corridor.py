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

"""Generate a corridor grid task."""


# type annotations
from __future__ import annotations

# standard libs
import logging

# internal libs
from ....core.logging import cli_setup
from ....task import write_file, dump_task
from ....generators import corridor_task
from ..common import Interface, exception_handlers, check_positive

# external libs
from cmdkit.app import Application


PROGRAM = 'navlearn gen corridor'
USAGE = f"""\
usage: {PROGRAM} [-h] --length NUM [--out FILE] [--debug | --verbose]
{__doc__}\
"""

HELP = f"""\
{USAGE}

The corridor has five rows, a single start cell in the middle row of the
first column, and a 3x3 patch of goal cells LENGTH columns away.

options:
-l, --length   NUM    Distance from the start cell to the goal patch.
-o, --out      FILE   Write the task to FILE (default: stdout).
-d, --debug           Show debugging messages.
-v, --verbose         Show information messages.
-h, --help            Show this message and exit.\
"""


# application logger
log = logging.getLogger('navlearn')


class CorridorApp(Application):
    """Application class for gen corridor command."""

    interface = Interface(PROGRAM, USAGE, HELP)

    length: int = None
    interface.add_argument('-l', '--length', type=int, required=True)

    out_path: str = None
    interface.add_argument('-o', '--out', dest='out_path', default=out_path)

    debug: bool = False
    verbose: bool = False
    logging_interface = interface.add_mutually_exclusive_group()
    logging_interface.add_argument('-d', '--debug', action='store_true')
    logging_interface.add_argument('-v', '--verbose', action='store_true')

    exceptions = exception_handlers()

    def run(self) -> None:
        """Business logic for `navlearn gen corridor`."""
        task = corridor_task(check_positive('length', self.length))
        write_file(self.out_path, dump_task(task))

    def __enter__(self) -> CorridorApp:
        """Initialize resources."""
        cli_setup(self)
        return self

    def __exit__(self, *exc) -> None:
        """Release resources."""
