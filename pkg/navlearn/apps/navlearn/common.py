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

"""Shared helpers for navlearn command-line applications."""


# type annotations
from typing import Dict, Callable, List, Type

# standard libs
import os
import re
import logging
from functools import partial

# internal libs
from ...core.config import ConfigurationError, get_option
from ...core.exceptions import exit_status, log_exception, NoConvergence
from ...task import Task, TaskError, load_task
from ...engine import InvalidOption
from ...experiments import QuantileError
from ...assets import load_task_asset, task_names

# external libs
from cmdkit import cli


# application logger
log = logging.getLogger('navlearn')


class UsageError(Exception):
    """Invalid combination or value of command-line options."""


class Interface(cli.Interface):
    """Command-line interface whose parsing errors are raised as `UsageError`."""

    def error(self, message: str) -> None:
        raise UsageError(message)

    def exit(self, status: int = 0, message: str = None) -> None:
        raise UsageError(message)


def exception_handlers(*, convergence: bool = False) -> Dict[Type[Exception], Callable[[Exception], int]]:
    """
    The `exceptions` mapping of an application.

    Option errors exit with the usage status; problems with inputs (task
    files, configuration, the file system) with the bad-task status.
    Handlers are matched in order with `isinstance`.
    """
    usage = partial(log_exception, logger=log.critical, status=exit_status.usage)
    bad_task = partial(log_exception, logger=log.critical, status=exit_status.bad_task)
    handlers = {
        UsageError: usage,
        QuantileError: usage,
        TaskError: bad_task,
        InvalidOption: bad_task,
        ConfigurationError: bad_task,
        OSError: bad_task,
    }
    if convergence:
        handlers[NoConvergence] = partial(log_exception, logger=log.critical,
                                          status=exit_status.no_convergence)
    return handlers


def read_task(path: str) -> Task:
    """
    Load the task file at `path`.

    A bare name (no directory part) that is not an existing file falls back
    to the packaged task of that name, e.g. `ladder.task`.
    """
    if not os.path.exists(path) and not os.path.dirname(path):
        name = os.path.splitext(path)[0]
        if name in task_names():
            log.info(f'Using packaged task \'{name}\'')
            return load_task_asset(name)
    return load_task(path)


SIZE_RANGE = re.compile(r'^(\d+)\.\.(\d+)$')


def parse_sizes(text: str) -> List[int]:
    """Parse sizes as an inclusive range ('2..10') or a comma-separated list ('2,4,8')."""
    match = SIZE_RANGE.match(text.strip())
    if match:
        low, high = int(match.group(1)), int(match.group(2))
        if low < 1 or high < low:
            raise UsageError(f'bad size range \'{text}\'')
        return list(range(low, high + 1))
    try:
        sizes = [int(value) for value in text.split(',')]
    except ValueError as error:
        raise UsageError(f'bad sizes \'{text}\' (expected A..B or A,B,...)') from error
    if not sizes or min(sizes) < 1:
        raise UsageError(f'sizes must be positive (given \'{text}\')')
    return sorted(set(sizes))


def option(value, section: str, name: str, kind: type = int):
    """Use the command-line `value` if given, else the configured `section.name`."""
    return kind(value) if value is not None else get_option(section, name, kind)


def check_positive(name: str, value: int) -> int:
    if value < 1:
        raise UsageError(f'{name} must be positive (given {value})')
    return value
