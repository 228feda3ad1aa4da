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

"""Reducibility, simple paths and necessary conditions for learnability."""


# type annotations
from __future__ import annotations
from typing import List, Tuple, Set, Iterable, Optional

# standard libs
import logging
from collections import deque

# internal libs
from ..task import Task, StateSet, Policy, goal_states
from .layers import LayerSequence, reducibility_layers

# public interface
__all__ = ['reduce_set', 'is_reducible', 'unstable_and_border', 'path_exists', 'reachable_states',
           'NecessaryConditionsReport', 'check_necessary_conditions', 'reducing_policy', ]


# initialize module level logger
log = logging.getLogger(__name__)


def goal_layers(task: Task) -> LayerSequence:
    """Reducibility layers seeded with the goal states."""
    return reducibility_layers(task, goal_states(task))


def reduce_set(task: Task) -> StateSet:
    """The states reducible to the goal states."""
    return goal_layers(task).fixpoint


def is_reducible(task: Task) -> bool:
    """True if every state of `task` is reducible to the goal states."""
    return len(reduce_set(task)) == len(task.states)


def unstable_and_border(task: Task) -> Tuple[StateSet, StateSet]:
    """
    The unstable set (states outside the reducible set) and the border set
    (reducible states with some action that can enter the unstable set).
    """
    index = task.index
    reducible = {index.state_index[q] for q in reduce_set(task)}
    unstable = set(range(index.num_states)) - reducible
    border = [q for q in sorted(reducible)
              if any(unstable.intersection(image) for image in index.successors[q])]
    return task.states_of(unstable), task.states_of(border)


def _forward_steps(task: Task, q: int) -> Iterable[int]:
    """Successors of `q` over its non-reward actions."""
    index = task.index
    for a in range(index.num_actions):
        if not index.rewarding[q][a]:
            yield from index.successors[q][a]


def _search(task: Task, sources: Iterable[int], steps) -> Set[int]:
    """Breadth-first closure of `sources` under `steps`."""
    found = set(sources)
    queue = deque(found)
    while queue:
        q = queue.popleft()
        for r in steps(task, q):
            if r not in found:
                found.add(r)
                queue.append(r)
    return found


def path_exists(task: Task, source: str, targets: Iterable[str]) -> bool:
    """
    True if a path without reward steps or repeated states leads from
    `source` to some member of `targets` (the empty path counts).

    A shortest walk never repeats a state, so plain reachability over the
    non-reward step relation decides this.
    """
    index = task.index
    goal = {index.state_index[q] for q in task.state_set(targets)}
    start = index.state_index[source]
    if start in goal:
        return True
    found = {start}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        for r in _forward_steps(task, q):
            if r in goal:
                return True
            if r not in found:
                found.add(r)
                queue.append(r)
    return False


def reachable_states(task: Task) -> StateSet:
    """States with a path (without reward steps) from some start state."""
    index = task.index
    return task.states_of(_search(task, index.starts, _forward_steps))


def _states_reaching(task: Task, targets: Iterable[int]) -> Set[int]:
    """States with a path (without reward steps) into `targets`."""
    index = task.index
    predecessors: List[List[int]] = [[] for _ in range(index.num_states)]
    for q in range(index.num_states):
        for r in _forward_steps(task, q):
            predecessors[r].append(q)
    return _search(task, targets, lambda _, r: predecessors[r])


class NecessaryConditionsReport:
    """
    Outcome of the necessary conditions for learnability.

    Both conditions are necessary but not sufficient: a task can satisfy
    them and still fail to be learnable.
    """

    reachable_states: StateSet
    states_without_path_to_goals: StateSet
    start_states_reducible: bool
    property_a_holds: bool
    is_reducible: bool
    unstable: StateSet
    border: StateSet

    def __init__(self, reachable_states: StateSet, states_without_path_to_goals: StateSet,
                 start_states_reducible: bool, is_reducible: bool,
                 unstable: StateSet, border: StateSet) -> None:
        self.reachable_states = reachable_states
        self.states_without_path_to_goals = states_without_path_to_goals
        self.start_states_reducible = start_states_reducible
        self.property_a_holds = not any(q in reachable_states for q in states_without_path_to_goals)
        self.is_reducible = is_reducible
        self.unstable = unstable
        self.border = border

    @property
    def necessary_conditions_hold(self) -> bool:
        return self.property_a_holds and self.start_states_reducible

    def __repr__(self) -> str:
        return (f'<NecessaryConditionsReport(property_a_holds={self.property_a_holds}, '
                f'start_states_reducible={self.start_states_reducible}, '
                f'is_reducible={self.is_reducible})>')


def check_necessary_conditions(task: Task) -> NecessaryConditionsReport:
    """Check that reachable states can reach a goal and that start states are reducible."""
    index = task.index
    goals = [index.state_index[q] for q in goal_states(task)]
    with_path = _states_reaching(task, goals)
    without_path = task.states_of(q for q in range(index.num_states) if q not in with_path)
    reducible = reduce_set(task)
    unstable, border = unstable_and_border(task)
    report = NecessaryConditionsReport(reachable_states=reachable_states(task),
                                       states_without_path_to_goals=without_path,
                                       start_states_reducible=all(q in reducible for q in task.start_states),
                                       is_reducible=len(reducible) == len(task.states),
                                       unstable=unstable, border=border)
    log.debug(f'Checked necessary conditions: {report}')
    return report


def reducing_policy(task: Task, fill: Optional[str] = None) -> Policy:
    """
    A policy that follows the reducibility layers down to reward.

    Goal states take their first rewarding action. Every other reducible state
    takes the first action whose successors all lie in the preceding layer.
    States outside the reducible set take `fill` (the first action by default).
    """
    index = task.index
    layers = goal_layers(task)
    fill_action = task.actions[0] if fill is None else fill
    if fill_action not in index.action_index:
        raise ValueError(f'unknown action \'{fill_action}\'')
    assignment = {}
    for q, name in enumerate(task.states):
        n = layers.layer_of(name)
        if n is None:
            assignment[name] = fill_action
        elif n == 1:
            a = index.rewarding[q].index(True)
            assignment[name] = task.actions[a]
        else:
            previous = {index.state_index[r] for r in layers.layer(n - 1)}
            a = next(a for a in range(index.num_actions) if previous.issuperset(index.successors[q][a]))
            assignment[name] = task.actions[a]
    return task.policy(assignment)
