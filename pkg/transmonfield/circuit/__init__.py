# coding: utf-8
from .current_phase import (current_phase, anharmonicity_coefficient,
                            effective_josephson_energy,
                            josephson_energy_from_current,
                            critical_current_from_energy)
from .charge_basis import charge_basis_levels
from .PhaseGridConfig import PhaseGridConfig
from .SpectrumResult import SpectrumResult
from .TransmonCircuit import TransmonCircuit
from ._approx import approx_transitions

__all__ = ['current_phase', 'anharmonicity_coefficient',
           'effective_josephson_energy', 'josephson_energy_from_current',
           'critical_current_from_energy', 'charge_basis_levels',
           'PhaseGridConfig', 'SpectrumResult', 'TransmonCircuit',
           'approx_transitions']
__all__.sort()
