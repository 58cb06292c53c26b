# coding: utf-8
from .fraunhofer import (fraunhofer_scale, fraunhofer_ic, gap_suppressed_ic,
                         perpendicular_component)
from .JunctionFieldParams import JunctionFieldParams
from .JunctionGeometry import JunctionGeometry
from .GapModel import GapModel
from .FieldSweep import FieldSweep
from .geometry import (FLUX_QUANTUM, junction_length_from_period,
                       period_from_length, flux_through_junction)
from .FieldModel import FieldModel
from .qubit_frequency import qubit_frequency_vs_field

__all__ = ['fraunhofer_scale', 'fraunhofer_ic', 'gap_suppressed_ic',
           'perpendicular_component', 'JunctionFieldParams', 'JunctionGeometry',
           'GapModel', 'FieldSweep', 'FLUX_QUANTUM', 'junction_length_from_period',
           'period_from_length', 'flux_through_junction', 'FieldModel',
           'qubit_frequency_vs_field']
__all__.sort()
