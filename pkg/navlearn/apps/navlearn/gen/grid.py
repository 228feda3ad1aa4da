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

"""Convert a grid sketch to a task file."""


# type annotations
from __future__ import annotations

# standard libs
import logging

# internal libs
from ....core.logging import cli_setup
from ....task import read_text, write_file, dump_task
from ....generators import grid_task, parse_grid_sketch
from ..common import Interface, exception_handlers

# external libs
from cmdkit.app import Application


PROGRAM = 'navlearn gen grid'
USAGE = f"""\
usage: {PROGRAM} [-h] --spec FILE [--out FILE] [--debug | --verbose]
{__doc__}\
"""

HELP = f"""\
{USAGE}

The sketch has one line per row, top row first: '.' is a cell, '#' is no
cell, 'S' a start cell, 'G' a goal cell and '*' both. In the task, y
increases upward (the bottom line is row 0).

options:
-s, --spec     FILE   Path to grid sketch.
-o, --out      FILE   Write the task to FILE (default: stdout).
-d, --debug           Show debugging messages.
-v, --verbose         Show information messages.
-h, --help            Show this message and exit.\
"""


# application logger
log = logging.getLogger('navlearn')


class GridApp(Application):
    """Application class for gen grid command."""

    interface = Interface(PROGRAM, USAGE, HELP)

    spec_path: str = None
    interface.add_argument('-s', '--spec', dest='spec_path', required=True)

    out_path: str = None
    interface.add_argument('-o', '--out', dest='out_path', default=out_path)

    debug: bool = False
    verbose: bool = False
    logging_interface = interface.add_mutually_exclusive_group()
    logging_interface.add_argument('-d', '--debug', action='store_true')
    logging_interface.add_argument('-v', '--verbose', action='store_true')

    exceptions = exception_handlers()

    def run(self) -> None:
        """Business logic for `navlearn gen grid`."""
        spec = parse_grid_sketch(read_text(self.spec_path))
        write_file(self.out_path, dump_task(grid_task(spec)))

    def __enter__(self) -> GridApp:
        """Initialize resources."""
        cli_setup(self)
        return self

    def __exit__(self, *exc) -> None:
        """Release resources."""
