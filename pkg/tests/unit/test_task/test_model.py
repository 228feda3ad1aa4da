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

"""Unit tests for task model."""


# external libs
import pytest

# internal libs
from navlearn.task import (Task, StateSet, Policy, PolicyError, InvalidTask, TaskError,
                           validate, goal_states)


class TestStateSet:
    """Unit tests for StateSet."""

    def test_keeps_order(self) -> None:
        """Iteration follows construction order."""
        assert list(StateSet(['3', '1', '2'])) == ['3', '1', '2']

    def test_equality_ignores_order(self) -> None:
        """Sets with the same members compare and hash equal."""
        assert StateSet(['1', '2']) == StateSet(['2', '1'])
        assert hash(StateSet(['1', '2'])) == hash(StateSet(['2', '1']))

    def test_repeated_members(self) -> None:
        """Repeated members are rejected."""
        with pytest.raises(ValueError):
            StateSet(['1', '1'])

    def test_set_operations(self) -> None:
        """Set algebra returns state sets."""
        union = StateSet(['1', '2']) | StateSet(['2', '3'])
        assert isinstance(union, StateSet)
        assert list(union) == ['1', '2', '3']
        assert StateSet(['1']) <= StateSet(['1', '2'])

    def test_repr(self) -> None:
        """Rendered with braces."""
        assert repr(StateSet(['1', '2'])) == '{1, 2}'
        assert repr(StateSet()) == '{}'


class TestPolicy:
    """Unit tests for Policy."""

    def test_mapping(self) -> None:
        """Behaves like a read-only mapping."""
        policy = Policy(['1', '2'], ['a', 'b'])
        assert dict(policy) == {'1': 'a', '2': 'b'}
        assert len(policy) == 2

    def test_assign_copies(self) -> None:
        """Assignment leaves the original unchanged."""
        policy = Policy(['1', '2'], ['a', 'a'])
        changed = policy.assign('2', 'b')
        assert policy['2'] == 'a'
        assert changed['2'] == 'b'
        assert changed != policy

    def test_assign_unknown_state(self) -> None:
        """Assigning a foreign state is an error."""
        with pytest.raises(PolicyError):
            Policy(['1'], ['a']).assign('9', 'a')

    def test_hashable(self) -> None:
        """Equal policies hash equal."""
        assert hash(Policy(['1', '2'], ['a', 'b'])) == hash(Policy(['2', '1'], ['b', 'a']))

    def test_mismatched_lengths(self) -> None:
        """One action per state is required."""
        with pytest.raises(PolicyError):
            Policy(['1', '2'], ['a'])


class TestTask:
    """Unit tests for Task."""

    def test_image(self, ladder: Task) -> None:
        """Images are state sets in canonical order."""
        assert list(ladder.image('1', 'a')) == ['1', '3']
        assert list(ladder.image('1', 'b')) == ['2']

    def test_is_reward(self, ladder: Task) -> None:
        """Rewarding pairs are recognized."""
        assert ladder.is_reward('3', 'a')
        assert not ladder.is_reward('1', 'a')

    def test_state_set_canonical(self, ladder: Task) -> None:
        """Members are sorted by declaration order."""
        assert list(ladder.state_set(['3', '1'])) == ['1', '3']

    def test_state_set_foreign(self, ladder: Task) -> None:
        """Undeclared states are rejected."""
        with pytest.raises(TaskError):
            ladder.state_set(['9'])

    def test_policy_constructors(self, ladder: Task) -> None:
        """Policies from an action, a function or a mapping agree."""
        by_action = ladder.policy('a')
        by_function = ladder.policy(lambda q: 'a')
        by_mapping = ladder.policy({'1': 'a', '2': 'a', '3': 'a'})
        assert by_action == by_function == by_mapping

    def test_policy_not_total(self, ladder: Task) -> None:
        """A mapping must cover every state."""
        with pytest.raises(PolicyError):
            ladder.policy({'1': 'a'})

    def test_policy_unknown_action(self, ladder: Task) -> None:
        """Actions must be declared."""
        with pytest.raises(PolicyError):
            ladder.policy('z')

    def test_policy_indices(self, ladder: Task) -> None:
        """Action indices follow canonical state order."""
        policy = ladder.policy({'1': 'b', '2': 'a', '3': 'b'})
        assert ladder.policy_indices(policy) == [1, 0, 1]
        assert ladder.policy_from_indices([1, 0, 1]) == policy

    def test_index(self, ladder: Task) -> None:
        """The integer view mirrors the task."""
        index = ladder.index
        assert index.successors[0][0] == (0, 2)
        assert index.starts == (0, )
        assert index.goals == (2, )
        assert index.branch_options[0] == ((0, 0), (0, 2), (1, 1))

    def test_index_of_invalid_task(self) -> None:
        """Indexing an invalid task raises with the report."""
        task = Task(states=['1'], start_states=['1'], actions=['a'], rewards=[], delta={('1', 'a'): ['1']})
        with pytest.raises(InvalidTask) as error:
            _ = task.index
        assert 'rewards must be nonempty' in error.value.report

    def test_equality(self, ladder: Task) -> None:
        """Tasks compare by content."""
        copy = Task(ladder.states, ladder.start_states, ladder.actions,
                    reversed(ladder.rewards), dict(ladder.delta))
        assert copy == ladder


class TestValidate:
    """Unit tests for validate."""

    def test_valid(self, ladder: Task, trap: Task, single_state: Task) -> None:
        """Packaged tasks are valid."""
        assert validate(ladder) == []
        assert validate(trap) == []
        assert validate(single_state) == []

    def test_empty_image(self) -> None:
        """Every pair needs at least one successor."""
        task = Task(states=['1'], start_states=['1'], actions=['a'], rewards=[('1', 'a')],
                    delta={('1', 'a'): []})
        assert validate(task) == ['delta image must be nonempty for (1,a)']

    def test_missing_delta(self) -> None:
        """Every pair needs a delta entry."""
        task = Task(states=['1', '2'], start_states=['1'], actions=['a'], rewards=[('1', 'a')],
                    delta={('1', 'a'): ['2']})
        assert validate(task) == ['missing delta for (2,a)']

    def test_undeclared_start(self) -> None:
        """Start states must be declared."""
        task = Task(states=['1'], start_states=['2'], actions=['a'], rewards=[('1', 'a')],
                    delta={('1', 'a'): ['1']})
        assert validate(task) == ['start state \'2\' is not a declared state']


def test_goal_states(ladder: Task, trap: Task) -> None:
    """Goal states are those with a rewarding action."""
    assert goal_states(ladder) == {'3'}
    assert goal_states(trap) == {'3'}
