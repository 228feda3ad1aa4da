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

"""Schedulers resolve each choice point of a trial to one option."""


# type annotations
from __future__ import annotations
from typing import List, Tuple, Dict, Sequence, Union

# standard libs
import logging
from abc import ABC, abstractmethod

# external libs
import numpy as np

# internal libs
from ..task import Task, TaskFileError, read_text
from .configuration import Configuration, InvalidOption

# public interface
__all__ = ['Scheduler', 'RotatingScheduler', 'RandomScheduler', 'ScriptedScheduler', 'SCHEDULERS',
           'make_scheduler', 'scheduler_choose', 'parse_script', 'load_script', ]


# initialize module level logger
log = logging.getLogger(__name__)


IndexOption = Tuple[int, int]
Seed = Union[int, np.random.SeedSequence, None]


class Scheduler(ABC):
    """
    Decision procedure for the options of a configuration.

    Configurations are given in the indexed form used by the simulation loop:
    the current state index, the action index of every state, and the working
    memory as a bit mask over state indices.
    """

    name: str = None

    @abstractmethod
    def choose(self, task: Task, state: int, policy: Sequence[int], memory: int,
               options: Sequence[IndexOption]) -> int:
        """Zero-based position of the chosen option within `options`."""

    def __repr__(self) -> str:
        return f'<{self.__class__.__name__}>'


class RotatingScheduler(Scheduler):
    """
    Cycle through the options of every configuration by its visit count.

    The k-th occurrence (counting from zero) of a configuration takes option
    k mod n of its n options, so every option of a configuration occurring
    infinitely often is taken infinitely often.
    """

    name = 'rotating'
    counts: Dict[Tuple[int, Tuple[int, ...], int], int]

    def __init__(self) -> None:
        self.counts = {}

    def choose(self, task: Task, state: int, policy: Sequence[int], memory: int,
               options: Sequence[IndexOption]) -> int:
        key = state, tuple(policy), memory
        count = self.counts.get(key, 0)
        self.counts[key] = count + 1
        return count % len(options)

    def __repr__(self) -> str:
        return f'<RotatingScheduler(configurations={len(self.counts)})>'


class RandomScheduler(Scheduler):
    """Draw one option uniformly from the canonically ordered options."""

    name = 'random'
    rng: np.random.Generator
    buffer_size: int = 4096

    def __init__(self, seed: Seed = None, buffer_size: int = 4096) -> None:
        self.rng = np.random.default_rng(seed)
        self.buffer_size = buffer_size
        self._buffer: List[float] = []
        self._position = 0

    def uniform(self) -> float:
        """Next uniform draw from [0, 1)."""
        if self._position == len(self._buffer):
            self._buffer = self.rng.random(self.buffer_size).tolist()
            self._position = 0
        u = self._buffer[self._position]
        self._position += 1
        return u

    def choose(self, task: Task, state: int, policy: Sequence[int], memory: int,
               options: Sequence[IndexOption]) -> int:
        # one draw per choice point, even with a single option
        return int(self.uniform() * len(options))


class ScriptedScheduler(Scheduler):
    """
    Replay a fixed list of (action, state) options.

    Raises InvalidOption when the next scripted option is not available or
    the script is exhausted (unless `cycle` is set).
    """

    name = 'scripted'
    script: List[Tuple[str, str]]
    cycle: bool = False
    position: int = 0

    def __init__(self, script: Sequence[Tuple[str, str]], cycle: bool = False) -> None:
        self.script = [tuple(option) for option in script]
        if not self.script:
            raise ValueError('scripted scheduler needs at least one option')
        self.cycle = cycle
        self.position = 0

    def choose(self, task: Task, state: int, policy: Sequence[int], memory: int,
               options: Sequence[IndexOption]) -> int:
        if self.position >= len(self.script):
            if not self.cycle:
                raise InvalidOption(f'script exhausted after {len(self.script)} options')
            self.position = 0
        action, successor = self.script[self.position]
        index = task.index
        try:
            wanted = index.action_index[action], index.state_index[successor]
            k = list(options).index(wanted)
        except (KeyError, ValueError) as error:
            raise InvalidOption(f'scripted option {self.position + 1} ({action},{successor}) '
                                f'not available in state {task.states[state]}') from error
        self.position += 1
        return k

    def __repr__(self) -> str:
        return f'<ScriptedScheduler(position={self.position}, length={len(self.script)}, cycle={self.cycle})>'


SCHEDULERS = ('rotating', 'random', 'scripted')


def make_scheduler(kind: str, seed: Seed = None, script: Sequence[Tuple[str, str]] = None,
                   cycle: bool = True) -> Scheduler:
    """Construct a scheduler by name."""
    if kind == 'rotating':
        return RotatingScheduler()
    if kind == 'random':
        return RandomScheduler(seed)
    if kind == 'scripted':
        if script is None:
            raise ValueError('scripted scheduler requires a script')
        return ScriptedScheduler(script, cycle=cycle)
    raise ValueError(f'unknown scheduler \'{kind}\' (expected one of {", ".join(SCHEDULERS)})')


def scheduler_choose(sched: Scheduler, task: Task, cfg: Configuration,
                     opts: Sequence[Tuple[str, str]]) -> Tuple[Tuple[str, str], Scheduler]:
    """Choose one of `opts` at `cfg`; the scheduler is updated in place and returned."""
    index = task.index
    state = index.state_index[cfg.current_state]
    policy = task.policy_indices(cfg.policy)
    memory = 0
    for q in cfg.working_memory:
        memory |= 1 << index.state_index[q]
    indexed = [(index.action_index[a], index.state_index[r]) for a, r in opts]
    k = sched.choose(task, state, policy, memory, indexed)
    return tuple(opts[k]), sched


def parse_script(task: Task, text: str) -> List[Tuple[str, str]]:
    """Parse a scheduler script: one `<action> <state>` option per line."""
    script = []
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split('#', 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if len(tokens) != 2:
            raise TaskFileError('expected \'<action> <state>\'', line=number)
        action, state = tokens
        if action not in task.actions:
            raise TaskFileError(f'undeclared action \'{action}\'', line=number)
        if state not in task.states:
            raise TaskFileError(f'undeclared state \'{state}\'', line=number)
        script.append((action, state))
    if not script:
        raise TaskFileError('empty script')
    return script


def load_script(task: Task, path: str) -> List[Tuple[str, str]]:
    """Read and parse the scheduler script at `path`."""
    text = read_text(path)
    try:
        return parse_script(task, text)
    except TaskFileError as error:
        raise TaskFileError(error.message, line=error.line, path=path) from error
