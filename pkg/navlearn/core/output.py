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

"""Write output files all at once or not at all."""


# type annotations
from typing import IO, Iterator, Optional, Sequence, Tuple

# standard libs
import os
import sys
import logging
import tempfile
from contextlib import contextmanager, ExitStack


# initialize module level logger
log = logging.getLogger(__name__)


@contextmanager
def atomic_output(path: Optional[str] = None) -> Iterator[IO]:
    """
    Open a text stream for `path`, committed only if the block succeeds.

    Arguments
    ---------
    path: str (default: None)
        Destination file. If None or '-', standard output is used and nothing
        is buffered.

    Yields
    ------
    stream: IO
        A writable text stream. For a real path this is a temporary file in
        the same directory, renamed over `path` on success and removed on error.
    """
    if path is None or path == '-':
        yield sys.stdout
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    handle, tmp_path = tempfile.mkstemp(prefix='.navlearn-', suffix='.tmp', dir=directory)
    try:
        with os.fdopen(handle, mode='w', newline='') as stream:
            yield stream
        os.replace(tmp_path, path)
        log.debug(f'Wrote {path}')
    except BaseException:
        try:
            os.remove(tmp_path)
        except FileNotFoundError:
            pass
        raise


def write_outputs(outputs: Sequence[Tuple[Optional[str], str]]) -> None:
    """
    Write each (path, text) pair; every destination is opened before any is committed.

    A destination that cannot be opened leaves none of the others behind.
    """
    with ExitStack() as stack:
        streams = [(stack.enter_context(atomic_output(path)), text) for path, text in outputs]
        for stream, text in streams:
            stream.write(text)
