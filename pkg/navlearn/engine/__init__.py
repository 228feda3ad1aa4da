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

"""Operational semantics of the cycle-detection learner."""


from .configuration import (InvalidOption, Configuration, TransitionRecord,
                            is_branching, options, apply_option)
from .scheduler import (Scheduler, RotatingScheduler, RandomScheduler, ScriptedScheduler, SCHEDULERS,
                        make_scheduler, scheduler_choose, parse_script, load_script)
from .run import (DEFAULT_STEP_CAP, DEFAULT_TRIAL_CAP, TrialRecord, RunRecord, run_trial, run_trials,
                  run_until_convergence, random_policy, derive_seed, run_seeds)
