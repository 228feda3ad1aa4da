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

"""Monotone layer sequences computed by fixpoint iteration."""


# type annotations
from __future__ import annotations
from typing import List, Tuple, FrozenSet, Callable, Iterable, Iterator, Optional

# standard libs
import logging

# internal libs
from ..task import Task, StateSet

# public interface
__all__ = ['LayerSequence', 'iterate_layers', 'reducibility_layers', ]


# initialize module level logger
log = logging.getLogger(__name__)


Layer = FrozenSet[int]


def iterate_layers(seed: Iterable[int], grow: Callable[[Layer], Iterable[int]],
                   limit: int) -> List[Layer]:
    """
    Iterate `layer = layer | grow(layer)` from `seed` until it stops changing.

    Arguments
    ---------
    seed: Iterable[int]
        The first layer (as state indices).
    grow: Callable
        Given the current layer, returns the states to add.
    limit: int
        Number of states; the sequence cannot grow more than this many times.

    Returns
    -------
    layers: List[FrozenSet[int]]
        Every layer up to and including the first fixpoint.
    """
    layers = [frozenset(seed)]
    for _ in range(limit + 1):
        current = layers[-1]
        following = current.union(grow(current))
        if following == current:
            return layers
        layers.append(following)
    raise RuntimeError(f'layer iteration did not reach a fixpoint within {limit} steps')


class LayerSequence:
    """
    Monotone sequence of state sets ending at its fixpoint.

    Layers are numbered from 1; `fixpoint_index` is the first n with
    layer n equal to layer n+1, which is also the number of layers kept.
    """

    task: Task
    layers: Tuple[StateSet, ...]

    def __init__(self, task: Task, layers: Iterable[StateSet]) -> None:
        self.task = task
        self.layers = tuple(layers)
        if not self.layers:
            raise ValueError('LayerSequence needs at least one layer')

    @classmethod
    def from_indices(cls, task: Task, layers: Iterable[Layer]) -> LayerSequence:
        """Build from layers of state indices."""
        return cls(task, [task.states_of(layer) for layer in layers])

    @property
    def fixpoint_index(self) -> int:
        return len(self.layers)

    @property
    def fixpoint(self) -> StateSet:
        return self.layers[-1]

    def layer(self, n: int) -> StateSet:
        """The n-th layer (1-based); layers past the fixpoint repeat it."""
        if n < 1:
            raise IndexError(f'layers are numbered from 1 (given {n})')
        return self.layers[min(n, len(self.layers)) - 1]

    def layer_of(self, state: str) -> Optional[int]:
        """The first layer (1-based) containing `state`, None if it never enters."""
        for n, layer in enumerate(self.layers, start=1):
            if state in layer:
                return n
        return None

    def __iter__(self) -> Iterator[StateSet]:
        return iter(self.layers)

    def __len__(self) -> int:
        return len(self.layers)

    def __repr__(self) -> str:
        return f'<LayerSequence(fixpoint_index={self.fixpoint_index}, fixpoint={self.fixpoint})>'


def reducibility_layers(task: Task, seed: Iterable[str]) -> LayerSequence:
    """
    Layers of states that can be forced into the previous layer by some action.

    Each layer adds every state having an action whose entire successor set
    lies in the layer before it.
    """
    index = task.index
    seed_indices = [index.state_index[q] for q in task.state_set(seed)]
    successors = index.successors

    def grow(layer: Layer) -> List[int]:
        return [q for q in range(index.num_states)
                if q not in layer and any(layer.issuperset(image) for image in successors[q])]

    layers = iterate_layers(seed_indices, grow, index.num_states)
    log.debug(f'Reducibility layers reached fixpoint after {len(layers)} layers')
    return LayerSequence.from_indices(task, layers)
