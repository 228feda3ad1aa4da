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
Grid navigation tasks.

Every movement action has a main direction plus one left-rotating and one
right-rotating noise offset. A move happens only if all three child cells
exist; otherwise the agent stays where it is.
"""


# type annotations
from __future__ import annotations
from typing import Tuple, List, Dict, Iterable, FrozenSet

# standard libs
import logging

# internal libs
from ..task import Task, TaskError

# public interface
__all__ = ['GRID_ACTIONS', 'OFFSETS', 'GLYPHS', 'GridSpec', 'GridSpecError', 'cell_id', 'parse_cell_id',
           'move', 'grid_task', 'corridor_spec', 'corridor_task', 'parse_grid_sketch', 'grid_sketch',
           'grid_cells', 'render_cells', ]


# initialize module level logger
log = logging.getLogger(__name__)


Cell = Tuple[int, int]


# main direction first, then the left- and right-rotating options (y increases upward)
OFFSETS: Dict[str, Tuple[Cell, ...]] = {
    'finish':     ((0, 0), ),
    'left':       ((-1, 0), (-1, -1), (-1, 1)),
    'right':      ((1, 0), (1, -1), (1, 1)),
    'up':         ((0, 1), (-1, 1), (1, 1)),
    'down':       ((0, -1), (1, -1), (-1, -1)),
    'left-up':    ((-1, 1), (-1, 0), (0, 1)),
    'left-down':  ((-1, -1), (0, -1), (-1, 0)),
    'right-up':   ((1, 1), (0, 1), (1, 0)),
    'right-down': ((1, -1), (1, 0), (0, -1)),
}

GRID_ACTIONS: Tuple[str, ...] = tuple(OFFSETS)

GLYPHS: Dict[str, str] = {
    'finish': 'f', 'left': '←', 'right': '→', 'up': '↑', 'down': '↓',
    'left-up': '↖', 'left-down': '↙', 'right-up': '↗', 'right-down': '↘',
}

SKETCH_CELL = '.'
SKETCH_ABSENT = '#'
SKETCH_START = 'S'
SKETCH_GOAL = 'G'
SKETCH_START_GOAL = '*'


class GridSpecError(TaskError):
    """Invalid grid description."""


def cell_id(cell: Cell) -> str:
    """State identifier for `cell` ("x,y")."""
    return f'{cell[0]},{cell[1]}'


def parse_cell_id(name: str) -> Cell:
    """Inverse of `cell_id`."""
    try:
        x, y = name.split(',')
        return int(x), int(y)
    except ValueError as error:
        raise GridSpecError(f'not a grid state identifier: \'{name}\'') from error


def move(cell: Cell, action: str) -> Tuple[Cell, ...]:
    """Child cells of applying the offsets of `action` to `cell`."""
    x, y = cell
    return tuple((x + u, y + v) for u, v in OFFSETS[action])


class GridSpec:
    """Cells of a grid with its start and goal cells."""

    cells: FrozenSet[Cell]
    starts: FrozenSet[Cell]
    goals: FrozenSet[Cell]

    def __init__(self, cells: Iterable[Cell], starts: Iterable[Cell], goals: Iterable[Cell]) -> None:
        self.cells = frozenset(cells)
        self.starts = frozenset(starts)
        self.goals = frozenset(goals)
        if not self.goals:
            raise GridSpecError('grid needs at least one goal cell')
        if not self.starts:
            raise GridSpecError('grid needs at least one start cell')
        if not self.starts <= self.cells:
            raise GridSpecError('start cells must be grid cells')
        if not self.goals <= self.cells:
            raise GridSpecError('goal cells must be grid cells')

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GridSpec):
            return NotImplemented
        return (self.cells, self.starts, self.goals) == (other.cells, other.starts, other.goals)

    def __repr__(self) -> str:
        return f'<GridSpec(cells={len(self.cells)}, starts={len(self.starts)}, goals={len(self.goals)})>'


def grid_task(spec: GridSpec) -> Task:
    """
    Build the grid navigation task of `spec`.

    States are ordered by column then row; `finish` is rewarding at every goal cell.
    """
    cells = sorted(spec.cells)
    delta = {}
    for cell in cells:
        for action in GRID_ACTIONS:
            children = move(cell, action)
            if all(child in spec.cells for child in children):
                image = sorted(set(children))
            else:
                image = [cell]
            delta[cell_id(cell), action] = [cell_id(child) for child in image]
    task = Task(states=[cell_id(cell) for cell in cells],
                start_states=[cell_id(cell) for cell in sorted(spec.starts)],
                actions=GRID_ACTIONS,
                rewards=[(cell_id(cell), 'finish') for cell in sorted(spec.goals)],
                delta=delta)
    log.debug(f'Generated grid task {task}')
    return task


CORRIDOR_HEIGHT = 5
CORRIDOR_START_ROW = 2
GOAL_PATCH = 3


def corridor_spec(length: int) -> GridSpec:
    """
    Corridor of five rows with one start cell at column 0, middle row and a
    3x3 patch of goal cells whose nearest column is `length` away.
    """
    if length < 1:
        raise GridSpecError(f'corridor length must be positive (given {length})')
    width = length + GOAL_PATCH
    cells = [(x, y) for x in range(width) for y in range(CORRIDOR_HEIGHT)]
    goals = [(x, y) for x in range(length, width) for y in range(1, 1 + GOAL_PATCH)]
    return GridSpec(cells=cells, starts=[(0, CORRIDOR_START_ROW)], goals=goals)


def corridor_task(length: int) -> Task:
    """Grid task of the corridor of the given `length`."""
    return grid_task(corridor_spec(length))


def parse_grid_sketch(text: str) -> GridSpec:
    """
    Parse a grid sketch: one line per row, top row first.

    '.' is a cell, '#' is no cell, 'S' a start cell, 'G' a goal cell and '*'
    a cell that is both. Rows are flipped so y increases upward.
    """
    rows = [line.rstrip() for line in text.splitlines()]
    while rows and not rows[-1]:
        rows.pop()
    while rows and not rows[0]:
        rows.pop(0)
    if not rows:
        raise GridSpecError('empty grid sketch')
    cells, starts, goals = [], [], []
    height = len(rows)
    for number, row in enumerate(rows):
        y = height - 1 - number
        for x, char in enumerate(row):
            if char == SKETCH_ABSENT or char == ' ':
                continue
            if char not in (SKETCH_CELL, SKETCH_START, SKETCH_GOAL, SKETCH_START_GOAL):
                raise GridSpecError(f'line {number + 1}: unexpected character \'{char}\'')
            cells.append((x, y))
            if char in (SKETCH_START, SKETCH_START_GOAL):
                starts.append((x, y))
            if char in (SKETCH_GOAL, SKETCH_START_GOAL):
                goals.append((x, y))
    return GridSpec(cells=cells, starts=starts, goals=goals)


def _bounds(cells: Iterable[Cell]) -> Tuple[range, range]:
    cells = list(cells)
    xs = [x for x, _ in cells]
    ys = [y for _, y in cells]
    return range(min(xs), max(xs) + 1), range(max(ys), min(ys) - 1, -1)


def grid_sketch(spec: GridSpec) -> str:
    """Draw `spec` in the sketch format (inverse of `parse_grid_sketch`)."""
    columns, rows = _bounds(spec.cells)
    lines = []
    for y in rows:
        line = ''
        for x in columns:
            cell = (x, y)
            if cell not in spec.cells:
                line += SKETCH_ABSENT
            elif cell in spec.starts and cell in spec.goals:
                line += SKETCH_START_GOAL
            elif cell in spec.starts:
                line += SKETCH_START
            elif cell in spec.goals:
                line += SKETCH_GOAL
            else:
                line += SKETCH_CELL
        lines.append(line)
    return '\n'.join(lines) + '\n'


def grid_cells(task: Task) -> Dict[str, Cell]:
    """Cell coordinates of every state of a grid task."""
    if task.actions != GRID_ACTIONS:
        raise GridSpecError('not a grid navigation task (unexpected actions)')
    return {q: parse_cell_id(q) for q in task.states}


def render_cells(task: Task, glyphs: Dict[str, str]) -> List[str]:
    """Draw a grid task with `glyphs` per state ('#' outside the grid, blank when not given)."""
    cells = grid_cells(task)
    by_cell = {cell: q for q, cell in cells.items()}
    columns, rows = _bounds(cells.values())
    lines = []
    for y in rows:
        line = ''
        for x in columns:
            q = by_cell.get((x, y))
            if q is None:
                line += SKETCH_ABSENT
            else:
                line += glyphs.get(q, ' ')
        lines.append(line.rstrip())
    return lines
