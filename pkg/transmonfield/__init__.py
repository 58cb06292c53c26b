# coding: utf-8
# Standard Python libraries
from importlib import resources

# Read version from VERSION file
__version__ = resources.read_text('transmonfield', 'VERSION').strip()

from . import tools
from .Settings import settings
from . import errors

# Import the model layers
from . import circuit
from .circuit import TransmonCircuit, PhaseGridConfig, SpectrumResult

from . import field
from .field import FieldModel, FieldSweep, JunctionFieldParams

from . import coherence
from .coherence import CoherenceSample, EnvelopeModel, LossBudget, NoiseSpec

from . import optim
from .optim import FitResult, OptimizerConfig, minimize

from . import tracesim
from .tracesim import Trace, TraceConfig

from . import cli
from .cli import RunConfig, load_sweep_csv

__all__ = sorted([
    '__version__', 'tools', 'settings', 'errors',
    'circuit', 'TransmonCircuit', 'PhaseGridConfig', 'SpectrumResult',
    'field', 'FieldModel', 'FieldSweep', 'JunctionFieldParams',
    'coherence', 'CoherenceSample', 'EnvelopeModel', 'LossBudget', 'NoiseSpec',
    'optim', 'FitResult', 'OptimizerConfig', 'minimize',
    'tracesim', 'Trace', 'TraceConfig',
    'cli', 'RunConfig', 'load_sweep_csv',
])
