# coding: utf-8
# Standard Python libraries
from pathlib import Path
from typing import Union

# https://numpy.org/
import numpy as np

# https://pandas.pydata.org/
import pandas as pd

# Local imports
from ..errors import ValidationError
from .SweepTable import SweepTable, SWEEP_COLUMNS

__all__ = ['load_sweep_csv']

def load_sweep_csv(path: Union[str, Path]) -> SweepTable:
    """
    Loads a field-sweep CSV file.

    Parameters
    ----------
    path : str or Path
        The CSV file.  The header must hold b_mT and may hold nu01_GHz,
        gamma1_per_us, gamma2_per_us, gamma2_echo_per_us and direction.
        Empty rate cells are read as missing.

    Returns
    -------
    SweepTable

    Raises
    ------
    ValidationError
        If the file is empty, has unknown or missing columns, or holds a
        non-numeric cell.  Cell errors name the data row (1-based) and the
        column.
    """
    try:
        raw = pd.read_csv(path, dtype=str, keep_default_na=False,
                          skipinitialspace=True)
    except pd.errors.EmptyDataError as err:
        raise ValidationError(f'empty input: {path} holds no data') from err
    raw.columns = [str(c).strip() for c in raw.columns]

    unknown = [c for c in raw.columns if c not in SWEEP_COLUMNS]
    if len(unknown) > 0:
        raise ValidationError(f'unknown columns {unknown} in {path}; known columns '
                              f'are {list(SWEEP_COLUMNS)}')
    if 'b_mT' not in raw.columns:
        raise ValidationError(f'{path} has no b_mT column')
    if len(raw) == 0:
        raise ValidationError(f'empty input: {path} has a header but no rows')

    data = {}
    for column in raw.columns:
        cells = raw[column].str.strip()
        if column == 'direction':
            data[column] = cells.replace('', 'up').to_numpy()
            continue

        # float() parses each decimal string to the nearest double
        values = np.empty(len(cells))
        for row, cell in enumerate(cells):
            if cell == '' and column != 'b_mT':
                values[row] = np.nan
                continue
            try:
                values[row] = float(cell)
            except ValueError as err:
                raise ValidationError(f'non-numeric value {cell!r} in row {row + 1}, '
                                      f'column {column!r} of {path}') from err
        data[column] = values

    return SweepTable(pd.DataFrame(data))
