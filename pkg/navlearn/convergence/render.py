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

"""Draw policy sets of grid tasks."""


# type annotations
from typing import Iterable

# internal libs
from ..task import Task, Policy
from ..generators.grid import GLYPHS, GRID_ACTIONS, GridSpecError, render_cells

# public interface
__all__ = ['render_grid', ]


def render_grid(task: Task, policy: Policy, states: Iterable[str]) -> str:
    """
    Draw `states` of a grid task with the direction of their policy action.

    The top row has the largest y. Cells outside `states` are blank and
    positions that are not cells of the task are drawn as '#'.
    """
    if task.actions != GRID_ACTIONS:
        raise GridSpecError('only grid navigation tasks can be drawn')
    glyphs = {q: GLYPHS[policy[q]] for q in task.state_set(states)}
    return '\n'.join(render_cells(task, glyphs)) + '\n'
