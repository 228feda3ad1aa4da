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

"""Read and write the line-based task and policy file formats."""


# type annotations
from __future__ import annotations
from typing import List, Tuple, Dict, Optional, Iterator

# standard libs
import logging

# internal libs
from ..core.output import atomic_output
from .model import Task, Policy, TaskError, InvalidTask, PolicyError, validate

# public interface
__all__ = ['TaskFileError', 'parse_task', 'dump_task', 'load_task',
           'parse_policy', 'dump_policy', 'load_policy', 'read_text', 'write_file', ]


# initialize module level logger
log = logging.getLogger(__name__)


class TaskFileError(TaskError):
    """A task or policy file could not be parsed."""

    message: str
    line: Optional[int] = None
    path: Optional[str] = None

    def __init__(self, message: str, line: int = None, path: str = None) -> None:
        self.message = message
        self.line = line
        self.path = path
        super().__init__(str(self))

    def __str__(self) -> str:
        where = ''
        if self.path is not None:
            where += f'{self.path}: '
        if self.line is not None:
            where += f'line {self.line}: '
        return where + self.message


DIRECTIVES = ('states', 'start', 'actions', 'reward', 'delta')
SINGLE_DIRECTIVES = ('states', 'start', 'actions')


def _lines(text: str) -> Iterator[Tuple[int, str]]:
    """Yield (line number, content) skipping comments and blank lines."""
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split('#', 1)[0].strip()
        if content:
            yield number, content


def parse_task(text: str) -> Task:
    """
    Parse task file `text`.

    Delta images are stored in canonical (declaration) state order.

    Raises
    ------
    TaskFileError:
        On a syntax error, a reference to an undeclared state or action, a
        duplicate or missing delta entry, or a repeated successor.
    InvalidTask:
        If the parsed definition still violates a structural invariant.
    """
    declared: Dict[str, Tuple[int, List[str]]] = {}
    rewards: List[Tuple[int, str, str]] = []
    deltas: List[Tuple[int, str, str, List[str]]] = []
    for number, content in _lines(text):
        key, sep, rest = content.partition(':')
        key = key.strip()
        if not sep or key not in DIRECTIVES:
            raise TaskFileError(f'expected one of {", ".join(DIRECTIVES)} (found \'{content}\')', line=number)
        tokens = rest.split()
        if key in SINGLE_DIRECTIVES:
            if key in declared:
                raise TaskFileError(f'\'{key}\' declared more than once', line=number)
            if not tokens:
                raise TaskFileError(f'\'{key}\' needs at least one identifier', line=number)
            declared[key] = number, tokens
        elif key == 'reward':
            if len(tokens) != 2:
                raise TaskFileError('expected \'reward: <state> <action>\'', line=number)
            rewards.append((number, *tokens))
        else:
            if len(tokens) < 3 or tokens[2] != '->':
                raise TaskFileError('expected \'delta: <state> <action> -> <state> ...\'', line=number)
            deltas.append((number, tokens[0], tokens[1], tokens[3:]))

    for key in SINGLE_DIRECTIVES:
        if key not in declared:
            raise TaskFileError(f'missing \'{key}\' declaration')
    states = declared['states'][1]
    actions = declared['actions'][1]
    for key, names in (('states', states), ('actions', actions)):
        if len(set(names)) != len(names):
            raise TaskFileError(f'repeated identifier in \'{key}\'', line=declared[key][0])
    state_index = {q: i for i, q in enumerate(states)}
    action_index = {a: i for i, a in enumerate(actions)}

    def check_state(q: str, number: int) -> None:
        if q not in state_index:
            raise TaskFileError(f'undeclared state \'{q}\'', line=number)

    def check_action(a: str, number: int) -> None:
        if a not in action_index:
            raise TaskFileError(f'undeclared action \'{a}\'', line=number)

    start_line, start_states = declared['start']
    for q in start_states:
        check_state(q, start_line)
    if len(set(start_states)) != len(start_states):
        raise TaskFileError('repeated identifier in \'start\'', line=start_line)

    reward_pairs = {}
    for number, q, a in rewards:
        check_state(q, number)
        check_action(a, number)
        if (q, a) in reward_pairs:
            raise TaskFileError(f'duplicate reward for ({q},{a})', line=number)
        reward_pairs[q, a] = number
    if not reward_pairs:
        raise TaskFileError('at least one \'reward\' line required')

    delta: Dict[Tuple[str, str], Tuple[str, ...]] = {}
    delta_lines: Dict[Tuple[str, str], int] = {}
    for number, q, a, image in deltas:
        check_state(q, number)
        check_action(a, number)
        if (q, a) in delta:
            raise TaskFileError(f'duplicate delta for ({q},{a}) (first on line {delta_lines[q, a]})',
                                line=number)
        if not image:
            raise TaskFileError(f'delta image must be nonempty for ({q},{a})', line=number)
        for r in image:
            check_state(r, number)
        if len(set(image)) != len(image):
            raise TaskFileError(f'repeated successor in delta for ({q},{a})', line=number)
        delta[q, a] = tuple(sorted(image, key=state_index.__getitem__))
        delta_lines[q, a] = number

    for q in states:
        for a in actions:
            if (q, a) not in delta:
                raise TaskFileError(f'missing delta for ({q},{a})')

    canonical_rewards = sorted(reward_pairs, key=lambda pair: (state_index[pair[0]], action_index[pair[1]]))
    task = Task(states=states, start_states=start_states, actions=actions,
                rewards=canonical_rewards, delta=delta)
    report = validate(task)
    if report:
        raise InvalidTask(report)
    return task


def dump_task(task: Task) -> str:
    """Canonical task file text for `task`."""
    index = {q: i for i, q in enumerate(task.states)}
    action_index = {a: i for i, a in enumerate(task.actions)}
    lines = [f'states: {" ".join(task.states)}',
             f'start: {" ".join(task.start_states)}',
             f'actions: {" ".join(task.actions)}', ]
    for q, a in sorted(task.rewards, key=lambda pair: (index[pair[0]], action_index[pair[1]])):
        lines.append(f'reward: {q} {a}')
    for q in task.states:
        for a in task.actions:
            image = sorted(task.delta[q, a], key=index.__getitem__)
            lines.append(f'delta: {q} {a} -> {" ".join(image)}')
    return '\n'.join(lines) + '\n'


def read_text(path: str) -> str:
    """Read the UTF-8 text file at `path`; undecodable content is a `TaskFileError`."""
    with open(path, mode='r', encoding='utf-8') as source:
        try:
            return source.read()
        except UnicodeDecodeError as error:
            raise TaskFileError(f'not UTF-8 text (byte {error.start})', path=path) from error


def load_task(path: str) -> Task:
    """Read and parse the task file at `path`."""
    log.debug(f'Loading task from {path}')
    text = read_text(path)
    try:
        return parse_task(text)
    except TaskFileError as error:
        raise TaskFileError(error.message, line=error.line, path=path) from error


def parse_policy(task: Task, text: str) -> Policy:
    """
    Parse policy file `text` (one `<state> <action>` line per state) for `task`.

    Raises
    ------
    TaskFileError:
        On a malformed line, an unknown state or action, a repeated state, or
        a state left unassigned.
    """
    actions = set(task.actions)
    states = set(task.states)
    assignment: Dict[str, str] = {}
    for number, content in _lines(text):
        tokens = content.split()
        if len(tokens) != 2:
            raise TaskFileError('expected \'<state> <action>\'', line=number)
        q, a = tokens
        if q not in states:
            raise TaskFileError(f'undeclared state \'{q}\'', line=number)
        if a not in actions:
            raise TaskFileError(f'undeclared action \'{a}\'', line=number)
        if q in assignment:
            raise TaskFileError(f'state \'{q}\' assigned more than once', line=number)
        assignment[q] = a
    missing = [q for q in task.states if q not in assignment]
    if missing:
        raise TaskFileError(f'policy does not assign: {" ".join(missing)}')
    try:
        return task.policy(assignment)
    except PolicyError as error:
        raise TaskFileError(str(error)) from error


def dump_policy(policy: Policy) -> str:
    """Policy file text, one `<state> <action>` line per state."""
    return ''.join(f'{q} {a}\n' for q, a in policy.items())


def load_policy(task: Task, path: str) -> Policy:
    """Read and parse the policy file at `path` for `task`."""
    log.debug(f'Loading policy from {path}')
    text = read_text(path)
    try:
        return parse_policy(task, text)
    except TaskFileError as error:
        raise TaskFileError(error.message, line=error.line, path=path) from error


def write_file(path: str, text: str) -> None:
    """Write `text` to `path` (or stdout for '-') without leaving partial output."""
    with atomic_output(path) as stream:
        stream.write(text)
