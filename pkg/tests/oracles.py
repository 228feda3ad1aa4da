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

"""Direct set-based reference computations used to check the indexed ones."""


# type annotations
from typing import Set

# internal libs
from navlearn.task import Task, Policy


def naive_is_final(task: Task, policy: Policy) -> bool:
    """Forward-set inclusion in the backward set, by plain set iteration."""
    rewards = set(task.rewards)
    ground = {q for q in task.states if (q, policy[q]) in rewards}
    forward = set(task.start_states)
    while True:
        grown = forward | {r for q in forward - ground for r in task.delta[q, policy[q]]}
        if grown == forward:
            break
        forward = grown
    backward = set(ground)
    while True:
        grown = backward | {q for q in task.states if set(task.delta[q, policy[q]]) <= backward}
        if grown == backward:
            break
        backward = grown
    return forward <= backward


def naive_reduce(task: Task) -> Set[str]:
    """Fixpoint of the reducibility layers seeded with the goal states."""
    layer = {q for q, _ in task.rewards}
    while True:
        grown = layer | {q for q in task.states
                         if any(set(task.delta[q, a]) <= layer for a in task.actions)}
        if grown == layer:
            return layer
        layer = grown


def naive_path_exists(task: Task, source: str, targets: Set[str]) -> bool:
    """Depth-first search over non-rewarding steps; the empty path counts."""
    rewards = set(task.rewards)
    seen = {source}
    stack = [source]
    while stack:
        q = stack.pop()
        if q in targets:
            return True
        for a in task.actions:
            if (q, a) in rewards:
                continue
            for r in task.delta[q, a]:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
    return False
