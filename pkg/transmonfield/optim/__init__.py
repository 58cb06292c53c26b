# coding: utf-8
from .FitResult import FitResult
from .OptimizerConfig import OptimizerConfig
from .minimize import minimize, methods
from .fit_spectrum import SPECTRUM_PARAMETERS, fit_spectrum, spectrum_field_model
from .fit_envelope import fit_envelope
from .fit_dephasing_line import DephasingLineFit, fit_dephasing_line

__all__ = ['FitResult', 'OptimizerConfig', 'minimize', 'methods',
           'SPECTRUM_PARAMETERS', 'fit_spectrum', 'spectrum_field_model',
           'fit_envelope', 'DephasingLineFit', 'fit_dephasing_line']
__all__.sort()
