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

"""Unit tests for the final-policy characterization."""


# type annotations
from typing import Tuple

# standard libs
from itertools import product

# external libs
import pytest
from hypothesis import given

# internal libs
from navlearn.task import Task, Policy, parse_task
from navlearn.convergence import (ground, forward_set, backward_set, is_final_policy, analyze_policy)
from navlearn.generators import chain_task
from tests.strategies import tasks_with_policy
from tests.oracles import naive_is_final


class TestSets:
    """Unit tests for ground, forward and backward sets."""

    def test_ground(self, ladder: Task) -> None:
        """Only goal states with a rewarding policy action."""
        assert ground(ladder, ladder.policy('a')) == {'3'}

    def test_forward_constant_a(self, ladder: Task) -> None:
        """Following action a from state 1 never visits state 2."""
        assert forward_set(ladder, ladder.policy('a')).fixpoint == {'1', '3'}

    def test_forward_stops_at_ground(self) -> None:
        """Ground states are not expanded."""
        task = parse_task('states: s t\nstart: s\nactions: x\nreward: s x\ndelta: s x -> t\ndelta: t x -> t\n')
        assert forward_set(task, task.policy('x')).fixpoint == {'s'}

    def test_backward(self, ladder: Task) -> None:
        """Backward layers follow the policy into the ground."""
        policy = ladder.policy({'1': 'b', '2': 'b', '3': 'a'})
        assert list(backward_set(ladder, policy)) == [{'3'}, {'2', '3'}, {'1', '2', '3'}]
        assert backward_set(ladder, ladder.policy('a')).fixpoint == {'3'}


class TestIsFinal:
    """Unit tests for is_final_policy."""

    def test_ladder_final(self, ladder: Task) -> None:
        """Taking b in states 1 and 2 is final."""
        assert is_final_policy(ladder, ladder.policy({'1': 'b', '2': 'b', '3': 'a'}))
        assert is_final_policy(ladder, ladder.policy({'1': 'b', '2': 'b', '3': 'b'}))

    def test_ladder_not_final(self, ladder: Task) -> None:
        """Action a in state 1 may loop forever."""
        assert not is_final_policy(ladder, ladder.policy('a'))
        assert not is_final_policy(ladder, ladder.policy({'1': 'b', '2': 'a', '3': 'a'}))

    @pytest.mark.parametrize('actions', list(product('ab', repeat=3)))
    def test_ladder_all_policies(self, ladder: Task, actions: Tuple[str, ...]) -> None:
        """Every policy agrees with the plain set computation."""
        policy = Policy(ladder.states, actions)
        assert is_final_policy(ladder, policy) == naive_is_final(ladder, policy)
        assert is_final_policy(ladder, policy) == (actions[0] == 'b' and actions[1] == 'b')

    @pytest.mark.parametrize('n', [1, 2, 3, 4])
    def test_chain(self, n: int) -> None:
        """A chain policy is final exactly when every state i takes ai."""
        task = chain_task(n)
        for actions in product(task.actions, repeat=len(task.states)):
            policy = Policy(task.states, actions)
            expected = all(actions[i - 1] == f'a{i}' for i in range(1, n + 1))
            assert is_final_policy(task, policy) == expected

    @given(tasks_with_policy())
    def test_matches_naive(self, task_and_policy: Tuple[Task, Policy]) -> None:
        """Indexed test agrees with the plain set computation."""
        task, policy = task_and_policy
        assert is_final_policy(task, policy) == naive_is_final(task, policy)


class TestAnalyzePolicy:
    """Unit tests for analyze_policy."""

    def test_gap(self, ladder: Task) -> None:
        """State 1 is forward but not backward under constant a."""
        analysis = analyze_policy(ladder, ladder.policy('a'))
        assert analysis.ground == {'3'}
        assert analysis.forward == {'1', '3'}
        assert analysis.backward == {'3'}
        assert analysis.gap == {'1'}
        assert not analysis.is_final

    def test_final(self, ladder: Task) -> None:
        """No gap for a final policy."""
        analysis = analyze_policy(ladder, ladder.policy({'1': 'b', '2': 'b', '3': 'a'}))
        assert not analysis.gap
        assert analysis.is_final

    @given(tasks_with_policy())
    def test_agrees_with_test(self, task_and_policy: Tuple[Task, Policy]) -> None:
        """The layered sets give the same verdict as the direct test."""
        task, policy = task_and_policy
        assert analyze_policy(task, policy).is_final == is_final_policy(task, policy)
