# coding: utf-8

# https://numpy.org/
import numpy as np

# Local imports
from ..errors import ValidationError

__all__ = ['NoiseSpec']

class NoiseSpec():
    """
    Current noise of the field coil supply.
    """
    def __init__(self,
                 coil_constant: float,
                 s_i: float = 1e-15):
        """
        Class initializer.

        Parameters
        ----------
        coil_constant : float
            Field per coil current in mT/A.
        s_i : float, optional
            Current noise power spectral density in A²/Hz.  Default value is
            1e-15.
        """
        self.coil_constant = coil_constant
        self.s_i = s_i

    def __repr__(self) -> str:
        return f'NoiseSpec(coil_constant={self.coil_constant}, s_i={self.s_i})'

    @property
    def coil_constant(self) -> float:
        """float: Coil constant dB/dI in mT/A"""
        return self.__coil_constant

    @coil_constant.setter
    def coil_constant(self, value: float):
        value = float(value)
        if not 0 < value < np.inf:
            raise ValidationError(f'coil_constant must be positive and finite, got {value}')
        self.__coil_constant = value

    @property
    def s_i(self) -> float:
        """float: Current noise PSD in A²/Hz"""
        return self.__s_i

    @s_i.setter
    def s_i(self, value: float):
        value = float(value)
        if not 0 <= value < np.inf:
            raise ValidationError(f's_i must be finite and non-negative, got {value}')
        self.__s_i = value
