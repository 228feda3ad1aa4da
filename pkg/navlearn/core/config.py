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
Runtime configuration for navlearn.

Files:
         /etc/navlearn.toml    System
    ~/.navlearn/config.toml    User
      .navlearn/config.toml    Local
"""


# standard libs
import os
import logging

# external libs
from cmdkit.config import Namespace, Configuration, ConfigurationError  # noqa: unused


# module level logger
log = logging.getLogger(__name__)


CWD = os.getcwd()
HOME = os.getenv('HOME', CWD)
PATH = Namespace({
    'system': {
        'config': '/etc/navlearn.toml'},
    'user': {
        'config': f'{HOME}/.navlearn/config.toml'},
    'local': {
        'config': f'{CWD}/.navlearn/config.toml'},
})


# environment variables and configuration files are automatically
# depth-first merged with defaults
DEFAULT = Namespace({

    'logging': {
        'level': 'warning',
        'format': '%(asctime)s %(levelname)-8s [%(name)s] %(msg)s',
        'datefmt': '%Y-%m-%d %H:%M:%S',
    },

    'engine': {
        'step_cap': 1_000_000,   # transitions per trial before truncation
        'trial_cap': 100_000,    # trials per run before giving up on convergence
        'scheduler': 'random',
    },

    'experiment': {
        'p': 0.9,
        'runs': 400,
        'jobs': 1,
        'seed': 0,
    },
})


def get_config() -> Configuration:
    """Load configuration."""
    return Configuration.from_local(env=True,
                                    prefix='NAVLEARN',
                                    default=DEFAULT,
                                    system=PATH.system.config,
                                    user=PATH.user.config,
                                    local=PATH.local.config)


# single global instance
config = get_config()


def get_option(section: str, name: str, kind: type = int):
    """Look up `section.name` in the configuration and coerce to `kind`."""
    try:
        value = config[section][name]
    except KeyError as error:
        raise ConfigurationError(f'Missing "{section}.{name}" in configuration') from error
    try:
        return kind(value)
    except (TypeError, ValueError) as error:
        raise ConfigurationError(f'Bad value for "{section}.{name}": {value!r}') from error
