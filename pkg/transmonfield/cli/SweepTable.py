# coding: utf-8
# Standard Python libraries
from pathlib import Path
from typing import List, Union

# https://numpy.org/
import numpy as np

# https://pandas.pydata.org/
import pandas as pd

# Local imports
from ..errors import ValidationError
from ..coherence import CoherenceSample

__all__ = ['SweepTable', 'SWEEP_COLUMNS']

# Units are part of the column names
SWEEP_COLUMNS = ('b_mT', 'nu01_GHz', 'gamma1_per_us', 'gamma2_per_us',
                 'gamma2_echo_per_us', 'direction')

class SweepTable():
    """
    Column-oriented field-sweep records: b_mT plus any of the other known
    columns.  A missing direction column defaults to "up".
    """
    def __init__(self, data: pd.DataFrame):
        """
        Class initializer.

        Parameters
        ----------
        data : pandas.DataFrame
            The records.  Numeric columns are converted to float.

        Raises
        ------
        ValidationError
            If unknown columns are present, b_mT is missing or not finite,
            or direction holds anything but "up" and "down".
        """
        data = pd.DataFrame(data).reset_index(drop=True)

        unknown = [str(c) for c in data.columns if c not in SWEEP_COLUMNS]
        if len(unknown) > 0:
            raise ValidationError(f'unknown columns {unknown}; known columns are '
                                  f'{list(SWEEP_COLUMNS)}')
        if 'b_mT' not in data.columns:
            raise ValidationError('sweep table needs a b_mT column')

        for column in data.columns:
            if column != 'direction':
                data[column] = data[column].astype(float)
        if not np.all(np.isfinite(data['b_mT'].to_numpy())):
            raise ValidationError('b_mT values must be finite')

        if 'direction' not in data.columns:
            data['direction'] = 'up'
        data['direction'] = data['direction'].astype(str)
        bad = ~data['direction'].isin(['up', 'down'])
        if bad.any():
            row = int(np.flatnonzero(bad.to_numpy())[0])
            raise ValidationError(f'direction must be "up" or "down", got '
                                  f'{data["direction"][row]!r} in row {row + 1}')

        # Known column order
        self.__data = data[[c for c in SWEEP_COLUMNS if c in data.columns]]

    def __repr__(self) -> str:
        return f'SweepTable({len(self)} records, columns={self.columns})'

    def __len__(self) -> int:
        return len(self.__data)

    @property
    def data(self) -> pd.DataFrame:
        """pandas.DataFrame: a copy of the records"""
        return self.__data.copy()

    @property
    def columns(self) -> List[str]:
        """list: the column names present"""
        return list(self.__data.columns)

    def require(self, *columns: str):
        """
        Raises ValidationError naming the requested columns that are absent.
        """
        missing = [c for c in columns if c not in self.__data.columns]
        if len(missing) > 0:
            raise ValidationError(f'sweep table is missing columns {missing}')

    def samples(self) -> List[CoherenceSample]:
        """
        Converts the records to CoherenceSample objects.  Missing or NaN
        rate cells become None.
        """
        samples = []
        for row in self.__data.itertuples(index=False):
            row = row._asdict()
            samples.append(CoherenceSample(row['b_mT'],
                                           gamma1=row.get('gamma1_per_us'),
                                           gamma2_ramsey=row.get('gamma2_per_us'),
                                           gamma2_echo=row.get('gamma2_echo_per_us'),
                                           direction=row['direction']))
        return samples

    def save_csv(self, path: Union[str, Path]):
        """
        Writes the table as CSV with 17 significant digits, so that loading
        it back gives identical values.
        """
        self.__data.to_csv(path, index=False, float_format='%.17g')

    @classmethod
    def from_samples(cls, samples) -> 'SweepTable':
        """Builds a SweepTable from CoherenceSample objects"""
        return cls(pd.DataFrame([sample.metadata() for sample in samples]))
