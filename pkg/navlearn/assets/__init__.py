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

"""Packaged task fixtures."""


# type annotations
from typing import List, IO

# standard libs
import os
import fnmatch
import functools
import logging

# internal libs
from ..task import Task, parse_task
from ..generators import grid_task, parse_grid_sketch


# initialize module level logger
log = logging.getLogger(__name__)


# The absolute location of this directory.
DIRECTORY = os.path.dirname(__file__)
TASK_DIRECTORY = os.path.join(DIRECTORY, 'tasks')
TASK_SUFFIXES = ('.task', '.grid')


def abspath(relative_path: str) -> str:
    """Construct the absolute path to the file within /assets."""
    return os.path.normpath(os.path.join(DIRECTORY, relative_path.lstrip(os.path.sep)))


def find_files(pattern: str) -> List[str]:
    """List the assets (relative paths) matching the glob `pattern`."""
    found = []
    for root, _, files in os.walk(DIRECTORY):
        for name in files:
            path = os.path.relpath(os.path.join(root, name), DIRECTORY)
            if not name.endswith('.py') and '__pycache__' not in path and fnmatch.fnmatch(path, pattern):
                found.append(path)
    return sorted(found)


def open_asset(relative_path: str, mode: str = 'r', **kwargs) -> IO:
    """Open a file from the /assets subpackage."""
    try:
        return open(abspath(relative_path), mode=mode, **kwargs)
    except FileNotFoundError:
        log.error(f'Missing /assets/{relative_path}')
        raise


@functools.lru_cache(maxsize=None)
def load_asset(relative_path: str) -> str:
    """Load the text of an asset from its `relative_path` below /assets."""
    with open_asset(relative_path, mode='r', encoding='utf-8') as source:
        content = source.read()
        log.debug(f'Loaded /assets/{relative_path}')
        return content


def task_names() -> List[str]:
    """Names of the packaged tasks (file names without suffix)."""
    return [os.path.splitext(os.path.basename(path))[0] for path in find_files('tasks/*')
            if path.endswith(TASK_SUFFIXES)]


def load_task_asset(name: str) -> Task:
    """
    Load a packaged task by `name` (e.g., 'ladder').

    Task files are parsed directly; grid sketches are converted to grid tasks.
    """
    for suffix in TASK_SUFFIXES:
        relative_path = f'tasks/{name}{suffix}'
        if os.path.exists(abspath(relative_path)):
            text = load_asset(relative_path)
            if suffix == '.grid':
                return grid_task(parse_grid_sketch(text))
            return parse_task(text)
    raise FileNotFoundError(f'No packaged task named \'{name}\' (available: {", ".join(task_names())})')
