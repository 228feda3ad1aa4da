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

"""Static fixpoint and graph analyses of tasks."""


from .layers import LayerSequence, iterate_layers, reducibility_layers
from .reduce import (goal_layers, reduce_set, is_reducible, unstable_and_border, path_exists,
                     reachable_states, NecessaryConditionsReport, check_necessary_conditions,
                     reducing_policy)
