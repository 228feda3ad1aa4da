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

"""Chain tasks: a forward action per link, every other action back to the start."""


# standard libs
import logging

# internal libs
from ..task import Task, TaskError

# public interface
__all__ = ['chain_task', ]


# initialize module level logger
log = logging.getLogger(__name__)


def chain_task(n: int) -> Task:
    """
    Build the chain of length `n`.

    States are 1..n+1 and actions a1..an. In state i the action ai leads to any
    of the states i+1..n+1 and every other action back to state 1. State n+1
    is absorbing and rewarding under every action.
    """
    if n < 1:
        raise TaskError(f'chain length must be positive (given {n})')
    states = [str(i) for i in range(1, n + 2)]
    actions = [f'a{i}' for i in range(1, n + 1)]
    last = states[-1]
    delta = {}
    for i in range(1, n + 1):
        for j, action in enumerate(actions, start=1):
            if i == j:
                delta[str(i), action] = states[i:]
            else:
                delta[str(i), action] = ['1']
    for action in actions:
        delta[last, action] = [last]
    task = Task(states=states, start_states=['1'], actions=actions,
                rewards=[(last, action) for action in actions], delta=delta)
    log.debug(f'Generated chain task {task}')
    return task
