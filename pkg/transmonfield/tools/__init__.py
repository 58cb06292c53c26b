# coding: utf-8
from yabadaba.tools import aslist, screen_input
from .numderivative import numderivative, central_derivative
from .units import convert_quantity, parse_quantity, UNIT_TABLE

__all__ = ['aslist', 'screen_input', 'numderivative', 'central_derivative',
           'convert_quantity', 'parse_quantity', 'UNIT_TABLE']
__all__.sort()
