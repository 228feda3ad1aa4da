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

"""Unit tests for grid policy rendering."""


# external libs
import pytest

# internal libs
from navlearn.task import Task
from navlearn.convergence import render_grid
from navlearn.generators import GridSpecError, corridor_task


def test_render_box(box: Task) -> None:
    """Missing cells are drawn as '#' and unselected cells as blanks."""
    lines = render_grid(box, box.policy('up'), ['0,0']).splitlines()
    assert len(lines) == 8
    assert lines[-2:] == [' #######', '↑#######']
    assert all(line == '' for line in lines[:6])


def test_render_corridor_row() -> None:
    """Glyphs follow the policy action of each selected cell."""
    task = corridor_task(1)
    policy = task.policy(lambda q: 'finish' if q.startswith('1,') else 'right-up')
    lines = render_grid(task, policy, ['0,2', '1,2'])
    assert lines.splitlines()[2] == '↗f'


def test_render_not_grid(ladder: Task) -> None:
    """Only grid tasks can be drawn."""
    with pytest.raises(GridSpecError):
        render_grid(ladder, ladder.policy('a'), ['1'])
