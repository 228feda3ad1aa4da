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

"""Experiment result tables."""


# type annotations
from __future__ import annotations
from typing import Dict, Any, IO, Union

# standard libs
import logging

# external libs
import toml
import pandas as pd
from scipy import stats

# internal libs
from ..core.output import atomic_output

# public interface
__all__ = ['ExperimentTable', ]


# initialize module level logger
log = logging.getLogger(__name__)


class ExperimentTable:
    """
    One statistic per parameter value, plus the metadata that reproduces it.

    The underlying `frame` has the parameter in its first column and the
    statistic in the column named by `statistic`.
    """

    frame: pd.DataFrame
    parameter: str
    statistic: str
    metadata: Dict[str, Any]

    def __init__(self, frame: pd.DataFrame, parameter: str, statistic: str,
                 metadata: Dict[str, Any] = None) -> None:
        self.frame = frame.reset_index(drop=True)
        self.parameter = parameter
        self.statistic = statistic
        self.metadata = dict(metadata or {})
        values = self.frame[parameter]
        if not values.is_monotonic_increasing or values.duplicated().any():
            raise ValueError(f'\'{parameter}\' must be strictly increasing')

    def __len__(self) -> int:
        return len(self.frame)

    def __repr__(self) -> str:
        return f'<ExperimentTable({self.parameter} -> {self.statistic}, rows={len(self)})>'

    @property
    def parameters(self) -> pd.Series:
        return self.frame[self.parameter]

    @property
    def values(self) -> pd.Series:
        return self.frame[self.statistic]

    def skip(self, count: int) -> ExperimentTable:
        """Drop the first `count` rows."""
        if count < 0:
            raise ValueError(f'cannot skip a negative number of rows ({count})')
        metadata = {**self.metadata, 'skipped': self.metadata.get('skipped', 0) + count}
        return ExperimentTable(self.frame.iloc[count:], self.parameter, self.statistic, metadata)

    def trend(self) -> float:
        """Spearman rank correlation between parameter and statistic (missing values dropped)."""
        data = self.frame[[self.parameter, self.statistic]].dropna()
        if len(data) < 2:
            raise ValueError('trend needs at least two rows with values')
        result = stats.spearmanr(data[self.parameter].astype(float), data[self.statistic].astype(float))
        return float(result[0])

    def to_csv(self, path_or_stream: Union[str, IO, None] = None) -> None:
        """Write the table as CSV to a path (atomically), a stream, or stdout."""
        if path_or_stream is None or isinstance(path_or_stream, str):
            with atomic_output(path_or_stream) as stream:
                self.frame.to_csv(stream, index=False)
        else:
            self.frame.to_csv(path_or_stream, index=False)

    def to_toml(self) -> str:
        """Metadata as TOML text."""
        return toml.dumps(self.metadata)

    def write_metadata(self, path: str) -> None:
        """Write the metadata as TOML to `path`."""
        with atomic_output(path) as stream:
            toml.dump(self.metadata, stream)
