# coding: utf-8

# https://numpy.org/
import numpy as np

# Local imports
from ..errors import ValidationError
from .fraunhofer import fraunhofer_scale

__all__ = ['JunctionFieldParams']

class JunctionFieldParams():
    """
    Field response of one junction, E_J(B) = E_J⁰·|sinc((B - B_Δ)/B_Φ0)|.
    """
    def __init__(self,
                 ej0: float,
                 b_delta: float = 0.0,
                 b_phi0: float = np.inf):
        """
        Class initializer.

        Parameters
        ----------
        ej0 : float
            Zero-field Josephson energy E_J/h in GHz.
        b_delta : float, optional
            Background offset field in mT.  Default value is 0.
        b_phi0 : float, optional
            Field period of the interference pattern in mT.  Default value
            of inf gives a field-independent junction.
        """
        self.ej0 = ej0
        self.b_delta = b_delta
        self.b_phi0 = b_phi0

    def __repr__(self) -> str:
        return (f'JunctionFieldParams(ej0={self.ej0}, b_delta={self.b_delta}, '
                f'b_phi0={self.b_phi0})')

    def __eq__(self, other) -> bool:
        if not isinstance(other, JunctionFieldParams):
            return NotImplemented
        return (self.ej0, self.b_delta, self.b_phi0) == (other.ej0, other.b_delta, other.b_phi0)

    @property
    def ej0(self) -> float:
        """float: Zero-field Josephson energy in GHz"""
        return self.__ej0

    @ej0.setter
    def ej0(self, value: float):
        value = float(value)
        if not (np.isfinite(value) and value >= 0):
            raise ValidationError(f'ej0 must be finite and non-negative, got {value}')
        self.__ej0 = value

    @property
    def b_delta(self) -> float:
        """float: Offset field B_Δ in mT"""
        return self.__b_delta

    @b_delta.setter
    def b_delta(self, value: float):
        value = float(value)
        if not np.isfinite(value):
            raise ValidationError(f'b_delta must be finite, got {value}')
        self.__b_delta = value

    @property
    def b_phi0(self) -> float:
        """float: Interference period B_Φ0 in mT"""
        return self.__b_phi0

    @b_phi0.setter
    def b_phi0(self, value: float):
        value = float(value)
        if not value > 0:
            raise ValidationError(f'b_phi0 must be positive, got {value}')
        self.__b_phi0 = value

    def scale(self, b):
        """
        The |sinc| suppression factor at field b (mT).
        """
        return fraunhofer_scale(b, self.b_delta, self.b_phi0)

    def ej(self, b):
        """
        The Josephson energy in GHz at field b (mT).
        """
        return self.ej0 * self.scale(b)

    def metadata(self) -> dict:
        """
        Generates a dict of simple metadata values.
        """
        return {'ej0_GHz': self.ej0, 'b_delta_mT': self.b_delta, 'b_phi0_mT': self.b_phi0}
