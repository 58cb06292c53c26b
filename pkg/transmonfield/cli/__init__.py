# coding: utf-8
from .RunConfig import RunConfig
from .SweepTable import SweepTable, SWEEP_COLUMNS
from .load_sweep_csv import load_sweep_csv
from .plotdata import emit_plot_data, styles
from .checkpaper import check_paper
from .commands import cli, main, parse_b_range

__all__ = ['RunConfig', 'SweepTable', 'SWEEP_COLUMNS', 'load_sweep_csv',
           'emit_plot_data', 'styles', 'check_paper', 'cli', 'main',
           'parse_b_range']
__all__.sort()
