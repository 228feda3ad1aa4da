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

"""Common exceptions and error handling."""


# type annotations
from typing import Callable

# external libs
from cmdkit.config import Namespace


# exit codes for all command-line applications
exit_status = Namespace({
    'success': 0,
    'usage': 1,
    'bad_task': 2,
    'no_convergence': 3,
})


class NoConvergence(RuntimeError):
    """A simulation exhausted its caps without detecting the final policy."""


def log_exception(exc: Exception, logger: Callable[[str], None], status: int) -> int:
    """Log the exception and exit with `status`."""
    logger(str(exc))
    return status
