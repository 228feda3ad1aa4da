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

"""Task data model and file formats."""


from .model import (Task, StateSet, Policy, TaskIndex, TaskError, InvalidTask, PolicyError,
                    validate, goal_states)
from .format import (TaskFileError, parse_task, dump_task, load_task,
                     parse_policy, dump_policy, load_policy, read_text, write_file)
