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

"""Parameterized task families."""


from .grid import (GRID_ACTIONS, OFFSETS, GLYPHS, GridSpec, GridSpecError, cell_id, parse_cell_id,
                   move, grid_task, corridor_spec, corridor_task, parse_grid_sketch, grid_sketch,
                   grid_cells, render_cells)
from .chain import chain_task
