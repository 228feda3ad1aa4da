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

"""Unit tests for grid tasks."""


# external libs
import pytest

# internal libs
from navlearn.task import Task
from navlearn.generators import (GRID_ACTIONS, OFFSETS, GridSpec, GridSpecError, cell_id, parse_cell_id,
                                 move, grid_task, corridor_spec, corridor_task, parse_grid_sketch,
                                 grid_sketch, grid_cells)
from navlearn.analysis import is_reducible
from navlearn.assets import load_asset


class TestOffsets:
    """Unit tests for the action offsets."""

    def test_actions(self) -> None:
        """Nine actions with finish first."""
        assert GRID_ACTIONS == ('finish', 'left', 'right', 'up', 'down',
                                'left-up', 'left-down', 'right-up', 'right-down')

    def test_offsets(self) -> None:
        """Main direction first, then the two neighbouring directions."""
        assert OFFSETS['finish'] == ((0, 0), )
        assert OFFSETS['left'] == ((-1, 0), (-1, -1), (-1, 1))
        assert OFFSETS['down'] == ((0, -1), (1, -1), (-1, -1))
        assert OFFSETS['left-up'] == ((-1, 1), (-1, 0), (0, 1))
        assert OFFSETS['right-down'] == ((1, -1), (1, 0), (0, -1))

    def test_move(self) -> None:
        """Children are offsets from the cell."""
        assert move((2, 2), 'up') == ((2, 3), (1, 3), (3, 3))

    def test_cell_id(self) -> None:
        """Identifiers are 'x,y'."""
        assert cell_id((3, 4)) == '3,4'
        assert parse_cell_id('3,4') == (3, 4)
        with pytest.raises(GridSpecError):
            parse_cell_id('3')


class TestGridTask:
    """Unit tests for grid_task."""

    def test_single_cell(self) -> None:
        """Every move from a lone cell stays put."""
        task = grid_task(GridSpec(cells=[(0, 0)], starts=[(0, 0)], goals=[(0, 0)]))
        assert task.states == ('0,0', )
        assert task.rewards == (('0,0', 'finish'), )
        assert all(task.delta['0,0', a] == ('0,0', ) for a in GRID_ACTIONS)
        assert is_reducible(task)

    def test_stationary_at_border(self) -> None:
        """A move with a child outside the grid is stationary."""
        task = corridor_task(1)
        assert task.delta['0,2', 'left'] == ('0,2', )
        assert task.delta['0,4', 'up'] == ('0,4', )

    def test_nondeterministic_move(self) -> None:
        """An inner move has three successors in canonical order."""
        task = corridor_task(1)
        assert task.delta['1,2', 'right'] == ('2,1', '2,2', '2,3')

    def test_invalid_spec(self) -> None:
        """Goals and starts are required and must be cells."""
        with pytest.raises(GridSpecError):
            GridSpec(cells=[(0, 0)], starts=[(0, 0)], goals=[])
        with pytest.raises(GridSpecError):
            GridSpec(cells=[(0, 0)], starts=[(1, 0)], goals=[(0, 0)])

    def test_grid_cells(self, ladder: Task) -> None:
        """Only grid tasks have cells."""
        assert grid_cells(corridor_task(1))['3,4'] == (3, 4)
        with pytest.raises(GridSpecError):
            grid_cells(ladder)


class TestCorridor:
    """Unit tests for corridor tasks."""

    def test_geometry(self) -> None:
        """Five rows, start in the middle row and a 3x3 goal patch at the end."""
        task = corridor_task(7)
        assert len(task.states) == 5 * 10
        assert task.start_states == ('0,2', )
        assert {q for q, _ in task.rewards} == {f'{x},{y}' for x in range(7, 10) for y in range(1, 4)}
        assert all(a == 'finish' for _, a in task.rewards)

    @pytest.mark.parametrize('length', range(1, 16))
    def test_reducible(self, length: int) -> None:
        """Every corridor is reducible."""
        assert is_reducible(corridor_task(length))

    def test_invalid_length(self) -> None:
        """Length must be positive."""
        with pytest.raises(GridSpecError):
            corridor_spec(0)


class TestGridSketch:
    """Unit tests for grid sketches."""

    def test_parse_flips_rows(self) -> None:
        """The last line is row zero."""
        spec = parse_grid_sketch('G.\nS#\n')
        assert spec.cells == {(0, 0), (0, 1), (1, 1)}
        assert spec.starts == {(0, 0)}
        assert spec.goals == {(0, 1)}

    def test_start_goal(self) -> None:
        """'*' is both start and goal."""
        spec = parse_grid_sketch('*\n')
        assert spec.starts == spec.goals == {(0, 0)}

    def test_unexpected_character(self) -> None:
        """Only sketch characters are allowed."""
        with pytest.raises(GridSpecError, match='line 2'):
            parse_grid_sketch('G.\nSx\n')

    def test_inverse(self) -> None:
        """Drawing a parsed sketch gives it back."""
        text = load_asset('tasks/box.grid')
        assert grid_sketch(parse_grid_sketch(text)) == text

    def test_corridor_sketch(self) -> None:
        """The corridor drawn as a sketch."""
        assert grid_sketch(corridor_spec(1)) == '....\n.GGG\nSGGG\n.GGG\n....\n'
