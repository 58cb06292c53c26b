# coding: utf-8
from .CoherenceSample import CoherenceSample
from .EnvelopeModel import EnvelopeModel
from .LossBudget import LossBudget
from .NoiseSpec import NoiseSpec
from .dephasing import pure_dephasing, flux_noise_dephasing
from .slope import field_derivative, frequency_slope_vs_current, calibrate_coil_constant
from .budget import envelope_rate, loss_budget, loss_budget_table

__all__ = ['CoherenceSample', 'EnvelopeModel', 'LossBudget', 'NoiseSpec',
           'pure_dephasing', 'flux_noise_dephasing', 'field_derivative',
           'frequency_slope_vs_current', 'calibrate_coil_constant',
           'envelope_rate', 'loss_budget', 'loss_budget_table']
__all__.sort()
