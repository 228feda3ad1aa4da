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

"""Unit tests for configurations and options."""


# external libs
import pytest

# internal libs
from navlearn.task import Task, StateSet
from navlearn.engine import Configuration, InvalidOption, is_branching, options, apply_option


class TestOptions:
    """Unit tests for options."""

    def test_non_branching(self, ladder: Task) -> None:
        """Only the policy action at a fresh state."""
        cfg = Configuration('1', ladder.policy('a'), StateSet())
        assert not is_branching(cfg)
        assert options(ladder, cfg) == [('a', '1'), ('a', '3')]

    def test_branching(self, ladder: Task) -> None:
        """Every action at a revisited state, in canonical order."""
        cfg = Configuration('1', ladder.policy('a'), StateSet(['1']))
        assert is_branching(cfg)
        assert options(ladder, cfg) == [('a', '1'), ('a', '3'), ('b', '2')]

    def test_single_state(self, single_state: Task) -> None:
        """One state with one action has one option."""
        cfg = Configuration('s', single_state.policy('x'))
        assert options(single_state, cfg) == [('x', 's')]


class TestApplyOption:
    """Unit tests for apply_option."""

    def test_remembers_state(self, ladder: Task) -> None:
        """The departed state joins the working memory."""
        cfg = Configuration('1', ladder.policy('a'))
        target = apply_option(ladder, cfg, 'a', '1')
        assert target == Configuration('1', ladder.policy('a'), StateSet(['1']))
        assert target.policy is cfg.policy

    def test_changes_policy(self, ladder: Task) -> None:
        """A branching choice rewrites the policy of the departed state."""
        cfg = Configuration('1', ladder.policy('a'), StateSet(['1']))
        target = apply_option(ladder, cfg, 'b', '2')
        assert target.current_state == '2'
        assert target.policy['1'] == 'b'
        assert target.policy['2'] == 'a'
        assert target.working_memory == {'1'}

    def test_invalid(self, ladder: Task) -> None:
        """Options outside the eligible ones are rejected."""
        cfg = Configuration('1', ladder.policy('a'))
        with pytest.raises(InvalidOption):
            apply_option(ladder, cfg, 'b', '2')
        with pytest.raises(InvalidOption):
            apply_option(ladder, cfg, 'a', '2')

    def test_repr(self, ladder: Task) -> None:
        """Current state, its policy action and the memory."""
        cfg = Configuration('2', ladder.policy({'1': 'b', '2': 'a', '3': 'a'}), StateSet(['1']))
        assert repr(cfg) == '(2, a, {1})'
