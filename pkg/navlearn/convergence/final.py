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

"""
Ground, forward and backward sets of a policy and the final-policy test.

A policy occurring at the end of a trial is final (never changes again) exactly
when every state reachable from the start states by following it, without
expanding past the rewarded goal states, is also forced into those goal states
by following it.
"""


# type annotations
from __future__ import annotations
from typing import List, Sequence

# standard libs
import logging
from collections import deque

# internal libs
from ..task import Task, TaskIndex, StateSet, Policy
from ..analysis.layers import LayerSequence, Layer, iterate_layers

# public interface
__all__ = ['ground', 'forward_set', 'backward_set', 'is_final_policy', 'is_final_indices',
           'PolicyAnalysis', 'analyze_policy', ]


# initialize module level logger
log = logging.getLogger(__name__)


def _ground_indices(index: TaskIndex, actions: Sequence[int]) -> List[int]:
    # only goal states have rewarding actions
    return [q for q in range(index.num_states) if index.rewarding[q][actions[q]]]


def ground(task: Task, policy: Policy) -> StateSet:
    """Goal states whose policy action is rewarding."""
    return task.states_of(_ground_indices(task.index, task.policy_indices(policy)))


def forward_set(task: Task, policy: Policy) -> LayerSequence:
    """Layers reachable from the start states by following `policy` (ground states are not expanded)."""
    index = task.index
    actions = task.policy_indices(policy)
    grounded = frozenset(_ground_indices(index, actions))

    def grow(layer: Layer) -> List[int]:
        return [r for q in layer.difference(grounded) for r in index.successors[q][actions[q]]]

    return LayerSequence.from_indices(task, iterate_layers(index.starts, grow, index.num_states))


def backward_set(task: Task, policy: Policy) -> LayerSequence:
    """Layers of states whose policy action leads entirely into the previous layer, from ground."""
    index = task.index
    actions = task.policy_indices(policy)

    def grow(layer: Layer) -> List[int]:
        return [q for q in range(index.num_states)
                if q not in layer and layer.issuperset(index.successors[q][actions[q]])]

    seed = _ground_indices(index, actions)
    return LayerSequence.from_indices(task, iterate_layers(seed, grow, index.num_states))


def is_final_indices(index: TaskIndex, actions: Sequence[int]) -> bool:
    """
    Final-policy test on action indices (used after every rewarded trial).

    Computes both fixpoints directly: forward by search, backward by counting
    for each state how many of its policy successors are not yet absorbed.
    """
    successors = index.successors
    grounded = [index.rewarding[q][actions[q]] for q in range(index.num_states)]

    forward = set(index.starts)
    queue = deque(forward)
    while queue:
        q = queue.popleft()
        if grounded[q]:
            continue
        for r in successors[q][actions[q]]:
            if r not in forward:
                forward.add(r)
                queue.append(r)

    pending = [len(successors[q][actions[q]]) for q in range(index.num_states)]
    predecessors: List[List[int]] = [[] for _ in range(index.num_states)]
    for q in range(index.num_states):
        for r in successors[q][actions[q]]:
            predecessors[r].append(q)
    backward = [False] * index.num_states
    queue = deque(q for q in range(index.num_states) if grounded[q])
    for q in queue:
        backward[q] = True
    while queue:
        r = queue.popleft()
        for q in predecessors[r]:
            pending[q] -= 1
            if pending[q] == 0 and not backward[q]:
                backward[q] = True
                queue.append(q)

    return all(backward[q] for q in forward)


def is_final_policy(task: Task, policy: Policy) -> bool:
    """True if the forward fixpoint of `policy` lies within its backward fixpoint."""
    return is_final_indices(task.index, task.policy_indices(policy))


class PolicyAnalysis:
    """All sets of the final-policy test for one policy."""

    policy: Policy
    ground: StateSet
    forward_layers: LayerSequence
    backward_layers: LayerSequence

    def __init__(self, policy: Policy, ground: StateSet,
                 forward_layers: LayerSequence, backward_layers: LayerSequence) -> None:
        self.policy = policy
        self.ground = ground
        self.forward_layers = forward_layers
        self.backward_layers = backward_layers

    @property
    def forward(self) -> StateSet:
        return self.forward_layers.fixpoint

    @property
    def backward(self) -> StateSet:
        return self.backward_layers.fixpoint

    @property
    def gap(self) -> StateSet:
        """Forward states missing from the backward set (empty for a final policy)."""
        return StateSet(q for q in self.forward if q not in self.backward)

    @property
    def is_final(self) -> bool:
        return not self.gap

    def __repr__(self) -> str:
        return (f'<PolicyAnalysis(ground={self.ground}, forward={self.forward}, '
                f'backward={self.backward}, is_final={self.is_final})>')


def analyze_policy(task: Task, policy: Policy) -> PolicyAnalysis:
    """Compute ground, forward and backward sets for `policy` on `task`."""
    analysis = PolicyAnalysis(policy=policy, ground=ground(task, policy),
                              forward_layers=forward_set(task, policy),
                              backward_layers=backward_set(task, policy))
    log.debug(f'Analyzed policy: {analysis}')
    return analysis
