# coding: utf-8
# Standard Python libraries
from typing import Optional

# https://pandas.pydata.org/
import pandas as pd

# Local imports
from ..circuit import PhaseGridConfig
from .JunctionFieldParams import JunctionFieldParams
from .GapModel import GapModel
from .FieldSweep import FieldSweep
from .FieldModel import FieldModel

__all__ = ['qubit_frequency_vs_field']

def qubit_frequency_vs_field(jj1: JunctionFieldParams,
                             jj2: JunctionFieldParams,
                             e_c: float,
                             sweep: FieldSweep,
                             model: str = 'interference',
                             gap: Optional[GapModel] = None,
                             method: str = 'approx',
                             grid: Optional[PhaseGridConfig] = None,
                             regime_threshold: Optional[float] = None) -> pd.DataFrame:
    """
    Qubit transitions over a field sweep.  Builds a FieldModel and
    evaluates FieldModel.frequencies.

    Returns
    -------
    pandas.DataFrame
        Columns b_mT, nu01_GHz, nu12_GHz and regime_valid.
    """
    field_model = FieldModel(jj1, jj2, e_c, model=model, gap=gap, method=method,
                             grid=grid, regime_threshold=regime_threshold)
    return field_model.frequencies(sweep)
