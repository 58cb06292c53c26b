# coding: utf-8
# Standard Python libraries
import logging
from pathlib import Path
from typing import List, Optional, Sequence, Union

# https://numpy.org/
import numpy as np

# https://pandas.pydata.org/
import pandas as pd

# https://matplotlib.org/
import matplotlib
import matplotlib.pyplot as plt

# Local imports
from ..errors import ValidationError
from .SweepTable import SweepTable

__all__ = ['emit_plot_data', 'styles']

logger = logging.getLogger(__name__)

styles = ('xy', 'scatter-with-model')

# Fixed ids and no timestamp give identical SVG bytes for identical input
_SVG_RC = {'svg.hashsalt': 'transmonfield', 'svg.fonttype': 'none',
           'path.simplify': False}

def emit_plot_data(table: Union[pd.DataFrame, SweepTable],
                   path: Union[str, Path],
                   style: str = 'xy',
                   x: Optional[str] = None,
                   model_columns: Sequence[str] = ()) -> List[Path]:
    """
    Writes a table's numeric columns as a tab-separated file plus a
    minimal SVG rendering.

    Parameters
    ----------
    table : pandas.DataFrame or SweepTable
        The data.  Non-numeric columns are skipped.
    path : str or Path
        Output path without suffix; '.tsv' and '.svg' are appended.
    style : str, optional
        'xy' draws every column against x as lines.  'scatter-with-model'
        draws the model_columns as lines and the other columns as markers.
        Default value is 'xy'.
    x : str, optional
        Name of the abscissa column.  Default is the first numeric column.
    model_columns : sequence of str, optional
        Columns drawn as lines in 'scatter-with-model' style.

    Returns
    -------
    list of Path
        The data file and the graphic.

    Raises
    ------
    ValidationError
        If the table is empty, has fewer than two numeric columns, or the
        style or column names are invalid.
    OSError
        If the files cannot be written.
    """
    if isinstance(table, SweepTable):
        table = table.data
    if style not in styles:
        raise ValidationError(f'unknown plot style {style!r}: choose from {styles}')

    numeric = table.select_dtypes(include=[np.number])
    if len(numeric) == 0:
        raise ValidationError('cannot emit plot data for an empty table')
    if len(numeric.columns) < 2:
        raise ValidationError('plot data need at least two numeric columns')
    if x is None:
        x = numeric.columns[0]
    elif x not in numeric.columns:
        raise ValidationError(f'x column {x!r} is not a numeric column of the table')

    model_columns = list(model_columns)
    missing = [c for c in model_columns if c not in numeric.columns]
    if len(missing) > 0:
        raise ValidationError(f'model columns {missing} not in the table')
    if style == 'scatter-with-model' and len(model_columns) == 0:
        raise ValidationError('scatter-with-model style needs model_columns')

    path = Path(path)
    data_path = path.with_name(path.name + '.tsv')
    svg_path = path.with_name(path.name + '.svg')

    np.savetxt(data_path, numeric.to_numpy(dtype=float), fmt='%.17g', delimiter='\t',
               header='\t'.join(numeric.columns), comments='')

    columns = [c for c in numeric.columns if c != x]
    with matplotlib.rc_context(_SVG_RC):
        fig = plt.figure(figsize=(6, 4), dpi=72)
        try:
            ax = fig.add_subplot(111)
            xvalues = numeric[x].to_numpy()
            for column in columns:
                yvalues = numeric[column].to_numpy()
                if style == 'xy' or column in model_columns:
                    ax.plot(xvalues, yvalues, label=column)
                else:
                    ax.plot(xvalues, yvalues, 'o', markersize=3, label=column)
            ax.set_xlabel(x)
            ax.legend()
            fig.savefig(svg_path, format='svg', metadata={'Date': None})
        finally:
            plt.close(fig)

    logger.info('wrote %s and %s', data_path, svg_path)
    return [data_path, svg_path]
