# coding: utf-8
from .TraceConfig import TraceConfig
from .Trace import Trace
from .kinds import KINDS, TraceKind, get_kind
from .simulate import simulate_trace
from .fit import TraceFit, fit_trace
from .sequence import SequenceTruth, run_sequence, run_sweep

__all__ = ['TraceConfig', 'Trace', 'KINDS', 'TraceKind', 'get_kind',
           'simulate_trace', 'TraceFit', 'fit_trace', 'SequenceTruth',
           'run_sequence', 'run_sweep']
__all__.sort()
