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

"""Configurations, options and successor configurations."""


# type annotations
from __future__ import annotations
from typing import List, Tuple

# standard libs
import logging

# internal libs
from ..task import Task, StateSet, Policy

# public interface
__all__ = ['InvalidOption', 'Configuration', 'TransitionRecord',
           'is_branching', 'options', 'apply_option', ]


# initialize module level logger
log = logging.getLogger(__name__)


Option = Tuple[str, str]


class InvalidOption(RuntimeError):
    """An option outside of the configuration's options was chosen."""


class Configuration:
    """Current state, policy and working memory (states visited since the last reward)."""

    current_state: str
    policy: Policy
    working_memory: StateSet

    def __init__(self, current_state: str, policy: Policy, working_memory: StateSet = StateSet()) -> None:
        self.current_state = current_state
        self.policy = policy
        self.working_memory = working_memory

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return (self.current_state == other.current_state and self.policy == other.policy and
                set(self.working_memory) == set(other.working_memory))

    def __hash__(self) -> int:
        return hash((self.current_state, self.policy, self.working_memory))

    def __repr__(self) -> str:
        return f'({self.current_state}, {self.policy[self.current_state]}, {self.working_memory})'


class TransitionRecord:
    """One step from a source configuration to a target configuration."""

    source: Configuration
    action: str
    next_state: str
    target: Configuration
    is_reward: bool
    source_branching: bool

    def __init__(self, source: Configuration, action: str, next_state: str, target: Configuration,
                 is_reward: bool, source_branching: bool) -> None:
        self.source = source
        self.action = action
        self.next_state = next_state
        self.target = target
        self.is_reward = is_reward
        self.source_branching = source_branching

    @property
    def option(self) -> Option:
        return self.action, self.next_state

    def __repr__(self) -> str:
        return f'{self.source} -({self.action},{self.next_state})-> {self.target}'


def is_branching(cfg: Configuration) -> bool:
    """True if the current state has already been visited in this trial."""
    return cfg.current_state in cfg.working_memory


def options(task: Task, cfg: Configuration) -> List[Option]:
    """
    The (action, successor) pairs eligible at `cfg` in canonical order.

    Only the policy action is eligible unless the configuration is branching,
    in which case every action is.
    """
    q = cfg.current_state
    actions = task.actions if is_branching(cfg) else (cfg.policy[q], )
    return [(a, r) for a in actions for r in task.image(q, a)]


def apply_option(task: Task, cfg: Configuration, action: str, next_state: str) -> Configuration:
    """
    Successor configuration for the option (`action`, `next_state`).

    The departed state is remembered as visited and now maps to `action`.
    """
    if (action, next_state) not in options(task, cfg):
        raise InvalidOption(f'({action},{next_state}) is not an option at {cfg}')
    q = cfg.current_state
    policy = cfg.policy if cfg.policy[q] == action else cfg.policy.assign(q, action)
    memory = task.state_set(set(cfg.working_memory) | {q})
    return Configuration(next_state, policy, memory)
