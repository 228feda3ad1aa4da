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

"""Fixtures for unit tests."""


# standard libs
import os
from datetime import datetime

# external libs
import pytest

# internal libs
from navlearn.task import Task, parse_task
from navlearn.assets import load_task_asset


@pytest.fixture(scope='package')
def tmpdir() -> str:
    """Ensure a new temporary directory exists and return its path."""
    date = datetime.now().strftime('%Y%m%d-%H%M%S')
    path = f'/tmp/navlearn/tests/{date}'
    os.makedirs(path, exist_ok=True)
    return path


@pytest.fixture(scope='session')
def ladder() -> Task:
    """Three-state reducible task."""
    return load_task_asset('ladder')


@pytest.fixture(scope='session')
def ladder_branching() -> Task:
    """Three-state task with a fourth state reached nondeterministically."""
    return load_task_asset('ladder-branching')


@pytest.fixture(scope='session')
def trap() -> Task:
    """Three-state task whose middle state cannot be escaped reliably."""
    return load_task_asset('trap')


@pytest.fixture(scope='session')
def box() -> Task:
    """Grid with a goal patch and a walled-off lower region."""
    return load_task_asset('box')


SINGLE_STATE = """\
states: s
start: s
actions: x
reward: s x
delta: s x -> s
"""


@pytest.fixture(scope='session')
def single_state() -> Task:
    """One state whose only action is rewarding."""
    return parse_task(SINGLE_STATE)
