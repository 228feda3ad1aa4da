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

"""
Logging configuration for navlearn.

Enables custom logging format and level by configuration.
"""


# standard libs
import logging as _std

# internal libs
from .config import config


# isolate logging section from configuration
config = config.logging


# base logger
navlearn_logger = _std.getLogger('navlearn')
navlearn_logger.setLevel(getattr(_std, str(config.level).upper()))


# log messages to stderr
console_handler = _std.StreamHandler()
console_handler.setFormatter(_std.Formatter(config.format, datefmt=config.datefmt))
navlearn_logger.addHandler(console_handler)


def cli_setup(app) -> None:
    """Adjust the package log level from the -d/--debug and -v/--verbose flags of `app`."""
    if getattr(app, 'debug', False):
        navlearn_logger.setLevel(_std.DEBUG)
    elif getattr(app, 'verbose', False):
        navlearn_logger.setLevel(_std.INFO)
