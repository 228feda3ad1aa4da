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

"""Trials and runs of the cycle-detection learner."""


# type annotations
from __future__ import annotations
from typing import List, Tuple, Optional, Sequence

# standard libs
import logging

# external libs
import numpy as np

# internal libs
from ..task import Task, StateSet, Policy
from ..convergence import is_final_indices
from .configuration import Configuration, TransitionRecord
from .scheduler import Scheduler

# public interface
__all__ = ['DEFAULT_STEP_CAP', 'DEFAULT_TRIAL_CAP', 'TrialRecord', 'RunRecord', 'run_trial',
           'run_trials', 'run_until_convergence', 'random_policy', 'derive_seed', 'run_seeds', ]


# initialize module level logger
log = logging.getLogger(__name__)


DEFAULT_STEP_CAP = 1_000_000
DEFAULT_TRIAL_CAP = 100_000


class TrialRecord:
    """
    Outcome of one trial.

    A trial ends right after its first reward transition, or is truncated
    after the step cap. `transitions` is only filled when recording was asked
    for; `length` is always the exact number of transitions.
    """

    start_state: str
    start_policy: Policy
    end_policy: Policy
    length: int
    terminated_with_reward: bool
    truncated: bool
    branching_count: int
    branching_states: StateSet
    transitions: Tuple[TransitionRecord, ...]

    def __init__(self, start_state: str, start_policy: Policy, end_policy: Policy, length: int,
                 terminated_with_reward: bool, branching_count: int, branching_states: StateSet,
                 transitions: Sequence[TransitionRecord] = ()) -> None:
        self.start_state = start_state
        self.start_policy = start_policy
        self.end_policy = end_policy
        self.length = length
        self.terminated_with_reward = terminated_with_reward
        self.truncated = not terminated_with_reward
        self.branching_count = branching_count
        self.branching_states = branching_states
        self.transitions = tuple(transitions)

    @property
    def policy_changed(self) -> bool:
        return self.end_policy is not self.start_policy and self.end_policy != self.start_policy

    @property
    def non_terminal_count(self) -> int:
        """Number of configurations followed by a transition (every position but the last)."""
        return self.length

    def __repr__(self) -> str:
        outcome = 'reward' if self.terminated_with_reward else 'truncated'
        return (f'<TrialRecord(start={self.start_state}, length={self.length}, {outcome}, '
                f'branching={self.branching_count})>')


class RunRecord:
    """Trials of a run and the detected convergence trial, if any."""

    trials: List[TrialRecord]
    initial_policy: Policy
    convergence_trial_index: Optional[int]
    final_policy: Optional[Policy]
    start_rotation: int
    stop_reason: str

    def __init__(self, trials: List[TrialRecord], initial_policy: Policy, start_rotation: int,
                 convergence_trial_index: Optional[int], stop_reason: str) -> None:
        self.trials = trials
        self.initial_policy = initial_policy
        self.start_rotation = start_rotation
        self.convergence_trial_index = convergence_trial_index
        self.final_policy = None
        if convergence_trial_index is not None:
            self.final_policy = trials[convergence_trial_index - 1].end_policy
        self.stop_reason = stop_reason

    @property
    def converged(self) -> bool:
        return self.convergence_trial_index is not None

    @property
    def total_transitions(self) -> int:
        return sum(trial.length for trial in self.trials)

    @property
    def last_policy(self) -> Policy:
        return self.trials[-1].end_policy if self.trials else self.initial_policy

    @property
    def next_start_offset(self) -> int:
        """Round-robin position of the start state following the last trial."""
        return self.start_rotation + len(self.trials)

    def __repr__(self) -> str:
        return (f'<RunRecord(trials={len(self.trials)}, convergence_trial_index={self.convergence_trial_index}, '
                f'stop_reason={self.stop_reason})>')


def _execute(task: Task, start: int, policy: Policy, actions: List[int], sched: Scheduler,
             step_cap: int, record: bool) -> TrialRecord:
    """Run one trial from state index `start`; `actions` is updated in place."""
    index = task.index
    rewarding = index.rewarding
    branch_options = index.branch_options
    action_options = index.action_options
    choose = sched.choose
    transitions = []
    source = Configuration(task.states[start], policy, StateSet()) if record else None

    q = start
    memory = 0
    branched = 0
    branching_count = 0
    length = 0
    changed = False
    rewarded = False
    while length < step_cap:
        bit = 1 << q
        branching = memory & bit
        if branching:
            opts = branch_options[q]
            branching_count += 1
            branched |= bit
        else:
            opts = action_options[q][actions[q]]
        a, r = opts[choose(task, q, actions, memory, opts)]
        if actions[q] != a:
            actions[q] = a
            changed = True
        memory |= bit
        length += 1
        rewarded = rewarding[q][a]
        if record:
            target_policy = source.policy if not changed else task.policy_from_indices(actions)
            target = Configuration(task.states[r], target_policy, _memory_set(task, memory))
            transitions.append(TransitionRecord(source=source, action=task.actions[a],
                                                next_state=task.states[r], target=target,
                                                is_reward=rewarded, source_branching=bool(branching)))
            source = target
        q = r
        if rewarded:
            break

    end_policy = policy
    if changed:
        end_policy = task.policy_from_indices(actions)
        if end_policy == policy:
            end_policy = policy
    return TrialRecord(start_state=task.states[start], start_policy=policy, end_policy=end_policy,
                       length=length, terminated_with_reward=rewarded, branching_count=branching_count,
                       branching_states=_memory_set(task, branched), transitions=transitions)


def _memory_set(task: Task, memory: int) -> StateSet:
    return StateSet(q for i, q in enumerate(task.states) if memory >> i & 1)


def run_trial(task: Task, start: str, policy: Policy, sched: Scheduler,
              step_cap: int = DEFAULT_STEP_CAP, record: bool = True) -> Tuple[TrialRecord, Scheduler]:
    """
    Run one trial from `start` with an empty working memory.

    Returns the trial (truncated after `step_cap` transitions without reward)
    and the scheduler, whose state has advanced in place.
    """
    if step_cap < 1:
        raise ValueError(f'step cap must be positive (given {step_cap})')
    if start not in task.start_states:
        raise ValueError(f'\'{start}\' is not a start state')
    actions = task.policy_indices(policy)
    trial = _execute(task, task.index.state_index[start], policy, actions, sched, step_cap, record)
    return trial, sched


def run_trials(task: Task, sched: Scheduler, policy: Policy, count: int,
               step_cap: int = DEFAULT_STEP_CAP, start_offset: int = 0,
               record: bool = False) -> List[TrialRecord]:
    """
    Run `count` consecutive trials reusing the policy, starting states in
    round-robin order from `start_offset`. Stops early after a truncated trial.
    """
    if step_cap < 1:
        raise ValueError(f'step cap must be positive (given {step_cap})')
    starts = task.index.starts
    actions = task.policy_indices(policy)
    trials = []
    for i in range(count):
        trial = _execute(task, starts[(start_offset + i) % len(starts)], policy, actions,
                         sched, step_cap, record)
        trials.append(trial)
        policy = trial.end_policy
        if trial.truncated:
            log.debug(f'Trial {i + 1} truncated after {trial.length} transitions')
            break
    return trials


def run_until_convergence(task: Task, sched: Scheduler, initial_policy: Policy,
                          step_cap: int = DEFAULT_STEP_CAP, trial_cap: int = DEFAULT_TRIAL_CAP,
                          start_offset: int = 0, record: bool = False) -> RunRecord:
    """
    Run trials until the end policy of a rewarded trial passes the final-policy test.

    Start states rotate in canonical order beginning at `start_offset`. The run
    stops without convergence after `trial_cap` trials or a truncated trial.
    """
    if step_cap < 1 or trial_cap < 1:
        raise ValueError(f'caps must be positive (given step_cap={step_cap}, trial_cap={trial_cap})')
    index = task.index
    starts = index.starts
    actions = task.policy_indices(initial_policy)
    policy = initial_policy
    checked: Optional[Policy] = None
    trials = []
    convergence = None
    stop_reason = 'trial_cap'
    for i in range(trial_cap):
        trial = _execute(task, starts[(start_offset + i) % len(starts)], policy, actions,
                         sched, step_cap, record)
        trials.append(trial)
        policy = trial.end_policy
        if trial.truncated:
            stop_reason = 'truncated'
            break
        if policy is not checked:
            checked = policy
            if is_final_indices(index, actions):
                convergence = i + 1
                stop_reason = 'converged'
                break
    run = RunRecord(trials=trials, initial_policy=initial_policy, start_rotation=start_offset,
                    convergence_trial_index=convergence, stop_reason=stop_reason)
    log.debug(f'Finished run: {run}')
    return run


def random_policy(task: Task, seed: Optional[object] = None) -> Policy:
    """Assign a uniformly random action to every state."""
    rng = np.random.default_rng(seed)
    choice = rng.integers(0, len(task.actions), size=len(task.states))
    return task.policy_from_indices([int(a) for a in choice])


def derive_seed(master_seed: int, *keys: int) -> np.random.SeedSequence:
    """Seed sequence for the unit of work identified by `keys` under `master_seed`."""
    return np.random.SeedSequence([int(master_seed), *(int(key) for key in keys)])


def run_seeds(master_seed: int, *keys: int) -> Tuple[np.random.SeedSequence, np.random.SeedSequence]:
    """Independent (initial policy, scheduler) seed streams for one run."""
    policy_seed, scheduler_seed = derive_seed(master_seed, *keys).spawn(2)
    return policy_seed, scheduler_seed
