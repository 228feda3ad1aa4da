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

"""Tasks, state sets and policies."""


# type annotations
from __future__ import annotations
from typing import (Tuple, Dict, List, Iterable, Iterator, Mapping, Optional, Sequence, Union,
                    FrozenSet, Callable)

# standard libs
import logging
from types import MappingProxyType
from functools import cached_property
from collections.abc import Set as AbstractSet, Mapping as AbstractMapping


# initialize module level logger
log = logging.getLogger(__name__)


State = str
Action = str
Pair = Tuple[State, Action]


class TaskError(Exception):
    """Generic error with respect to a task definition."""


class InvalidTask(TaskError):
    """The task violates its structural invariants."""

    report: List[str] = []

    def __init__(self, report: List[str]) -> None:
        self.report = list(report)
        super().__init__('invalid task: ' + '; '.join(self.report))


class PolicyError(TaskError):
    """A policy is not a total map from the task's states to its actions."""


class StateSet(AbstractSet):
    """An immutable set of states that remembers the order it was built in."""

    _members: Tuple[State, ...] = ()
    _lookup: FrozenSet[State] = frozenset()

    def __init__(self, members: Iterable[State] = ()) -> None:
        """Initialize from `members` (order is kept, duplicates are not allowed)."""
        self._members = tuple(members)
        self._lookup = frozenset(self._members)
        if len(self._lookup) != len(self._members):
            raise ValueError(f'{self.__class__.__name__} given repeated members')

    @classmethod
    def _from_iterable(cls, iterable: Iterable[State]) -> StateSet:
        return cls(dict.fromkeys(iterable))

    def __contains__(self, state: object) -> bool:
        return state in self._lookup

    def __iter__(self) -> Iterator[State]:
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __hash__(self) -> int:
        return hash(self._lookup)

    def __repr__(self) -> str:
        return '{' + ', '.join(self._members) + '}'


class Policy(AbstractMapping):
    """An immutable assignment of one action to every state."""

    _states: Tuple[State, ...] = ()
    _actions: Tuple[Action, ...] = ()
    _lookup: Dict[State, Action] = {}

    def __init__(self, states: Sequence[State], actions: Sequence[Action]) -> None:
        """Initialize with parallel sequences of `states` and their `actions`."""
        self._states = tuple(states)
        self._actions = tuple(actions)
        if len(self._states) != len(self._actions):
            raise PolicyError('policy needs exactly one action per state')
        self._lookup = dict(zip(self._states, self._actions))
        if len(self._lookup) != len(self._states):
            raise PolicyError('policy assigns some state more than once')

    def __getitem__(self, state: State) -> Action:
        return self._lookup[state]

    def __iter__(self) -> Iterator[State]:
        return iter(self._states)

    def __len__(self) -> int:
        return len(self._states)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Policy):
            return self._lookup == other._lookup
        return super().__eq__(other)

    def __hash__(self) -> int:
        return hash(frozenset(self._lookup.items()))

    def __repr__(self) -> str:
        return '<Policy(' + ', '.join(f'{q}->{a}' for q, a in zip(self._states, self._actions)) + ')>'

    def assign(self, state: State, action: Action) -> Policy:
        """A copy of this policy with `state` mapped to `action`."""
        if state not in self._lookup:
            raise PolicyError(f'unknown state \'{state}\'')
        return Policy(self._states, tuple(action if q == state else a
                                          for q, a in zip(self._states, self._actions)))


class TaskIndex:
    """Integer-indexed view of a valid task used by the fixpoint and simulation loops."""

    def __init__(self, task: Task) -> None:
        report = validate(task)
        if report:
            raise InvalidTask(report)
        self.state_index = {q: i for i, q in enumerate(task.states)}
        self.action_index = {a: i for i, a in enumerate(task.actions)}
        self.num_states = len(task.states)
        self.num_actions = len(task.actions)
        rewards = frozenset(task.rewards)
        self.successors: List[List[Tuple[int, ...]]] = [
            [tuple(sorted(self.state_index[r] for r in task.delta[q, a])) for a in task.actions]
            for q in task.states]
        self.rewarding: List[List[bool]] = [
            [(q, a) in rewards for a in task.actions] for q in task.states]
        self.starts: Tuple[int, ...] = tuple(self.state_index[q] for q in task.start_states)
        self.goals: Tuple[int, ...] = tuple(i for i, row in enumerate(self.rewarding) if any(row))
        # options per (state, action) in canonical successor order, and all of them for branching
        self.action_options: List[List[Tuple[Tuple[int, int], ...]]] = [
            [tuple((a, r) for r in self.successors[q][a]) for a in range(self.num_actions)]
            for q in range(self.num_states)]
        self.branch_options: List[Tuple[Tuple[int, int], ...]] = [
            tuple(option for a in range(self.num_actions) for option in self.action_options[q][a])
            for q in range(self.num_states)]


class Task:
    """
    A finite nondeterministic transition system with start states and
    rewarding state-action pairs.

    The declaration order of `states` and `actions` is the canonical order used
    for every iteration over sets, options and files.
    """

    states: Tuple[State, ...] = ()
    start_states: Tuple[State, ...] = ()
    actions: Tuple[Action, ...] = ()
    rewards: Tuple[Pair, ...] = ()
    delta: Mapping[Pair, Tuple[State, ...]] = MappingProxyType({})

    def __init__(self, states: Iterable[State], start_states: Iterable[State],
                 actions: Iterable[Action], rewards: Iterable[Pair],
                 delta: Mapping[Pair, Iterable[State]]) -> None:
        """Direct initialization. Use `validate` to check the invariants."""
        self.states = tuple(states)
        self.start_states = tuple(start_states)
        self.actions = tuple(actions)
        self.rewards = tuple(tuple(pair) for pair in rewards)
        self.delta = MappingProxyType({tuple(pair): tuple(image) for pair, image in delta.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Task):
            return NotImplemented
        return (self.states == other.states and self.actions == other.actions and
                self.start_states == other.start_states and
                frozenset(self.rewards) == frozenset(other.rewards) and
                {pair: frozenset(image) for pair, image in self.delta.items()} ==
                {pair: frozenset(image) for pair, image in other.delta.items()})

    def __reduce__(self) -> tuple:
        return Task, (self.states, self.start_states, self.actions, self.rewards, dict(self.delta))

    def __repr__(self) -> str:
        return (f'<Task(states={len(self.states)}, actions={len(self.actions)}, '
                f'start={list(self.start_states)}, rewards={len(self.rewards)})>')

    @cached_property
    def index(self) -> TaskIndex:
        """Integer-indexed view (raises InvalidTask if the task is not valid)."""
        return TaskIndex(self)

    def image(self, state: State, action: Action) -> StateSet:
        """The successor states of applying `action` to `state`."""
        return self.state_set(self.delta[state, action])

    def is_reward(self, state: State, action: Action) -> bool:
        """True if (`state`, `action`) is immediately rewarding."""
        return self.index.rewarding[self.index.state_index[state]][self.index.action_index[action]]

    def state_set(self, members: Iterable[State]) -> StateSet:
        """Build a StateSet of `members` in canonical order."""
        index = {q: i for i, q in enumerate(self.states)}
        members = set(members)
        foreign = members.difference(index)
        if foreign:
            raise TaskError(f'not states of this task: {sorted(foreign)}')
        return StateSet(sorted(members, key=index.__getitem__))

    def states_of(self, indices: Iterable[int]) -> StateSet:
        """Build a StateSet from state indices in canonical order."""
        return StateSet(self.states[i] for i in sorted(set(indices)))

    def policy(self, assignment: Union[Mapping[State, Action], Callable[[State], Action], Action]) -> Policy:
        """
        Build a total policy for this task.

        The `assignment` may be a mapping (which must cover every state), a
        function of the state, or a single action assigned everywhere.
        """
        if isinstance(assignment, str):
            actions = [assignment] * len(self.states)
        elif callable(assignment):
            actions = [assignment(q) for q in self.states]
        else:
            missing = [q for q in self.states if q not in assignment]
            if missing:
                raise PolicyError(f'policy missing states: {missing}')
            extra = [q for q in assignment if q not in self.states]
            if extra:
                raise PolicyError(f'policy assigns unknown states: {extra}')
            actions = [assignment[q] for q in self.states]
        unknown = sorted(set(actions).difference(self.actions))
        if unknown:
            raise PolicyError(f'policy uses unknown actions: {unknown}')
        return Policy(self.states, actions)

    def policy_from_indices(self, actions: Sequence[int]) -> Policy:
        """Build a policy from action indices listed in canonical state order."""
        return Policy(self.states, tuple(self.actions[a] for a in actions))

    def policy_indices(self, policy: Policy) -> List[int]:
        """Action indices of `policy` in canonical state order."""
        try:
            return [self.index.action_index[policy[q]] for q in self.states]
        except KeyError as error:
            raise PolicyError(f'policy is not total on this task: {error}') from error


def validate(task: Task) -> List[str]:
    """
    Check the structural invariants of `task`.

    Returns
    -------
    report: List[str]
        One entry per violation; empty if and only if the task is valid.
    """
    report = []
    states, actions = set(task.states), set(task.actions)
    if not task.states:
        report.append('states must be nonempty')
    if len(states) != len(task.states):
        report.append('states must not repeat')
    if not task.start_states:
        report.append('start states must be nonempty')
    for q in task.start_states:
        if q not in states:
            report.append(f'start state \'{q}\' is not a declared state')
    if not task.actions:
        report.append('actions must be nonempty')
    if len(actions) != len(task.actions):
        report.append('actions must not repeat')
    if not task.rewards:
        report.append('rewards must be nonempty')
    for q, a in task.rewards:
        if q not in states or a not in actions:
            report.append(f'reward ({q},{a}) refers to an undeclared state or action')
    for q in task.states:
        for a in task.actions:
            if (q, a) not in task.delta:
                report.append(f'missing delta for ({q},{a})')
                continue
            image = task.delta[q, a]
            if not image:
                report.append(f'delta image must be nonempty for ({q},{a})')
            if len(set(image)) != len(image):
                report.append(f'delta image for ({q},{a}) repeats a state')
            for r in image:
                if r not in states:
                    report.append(f'delta image for ({q},{a}) contains undeclared state \'{r}\'')
    for q, a in task.delta:
        if q not in states or a not in actions:
            report.append(f'delta defined for undeclared pair ({q},{a})')
    return report


def goal_states(task: Task) -> StateSet:
    """States with at least one immediately rewarding action."""
    rewarded = {q for q, _ in task.rewards}
    return task.state_set(q for q in task.states if q in rewarded)
