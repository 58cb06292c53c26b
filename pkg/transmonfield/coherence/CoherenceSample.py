# coding: utf-8
# Standard Python libraries
from typing import Optional
import warnings

# https://numpy.org/
import numpy as np

# Local imports
from ..errors import ValidationError, UnphysicalDephasingWarning

__all__ = ['CoherenceSample']

class CoherenceSample():
    """
    Decay and dephasing rates measured (or simulated) at one field point.
    Rates are in µs⁻¹.
    """
    directions = ('up', 'down')

    def __init__(self,
                 b: float,
                 gamma1: Optional[float] = None,
                 gamma2_ramsey: Optional[float] = None,
                 gamma2_echo: Optional[float] = None,
                 direction: str = 'up'):
        """
        Class initializer.

        Parameters
        ----------
        b : float
            Applied field in mT.
        gamma1 : float, optional
            Decay rate Γ₁ = 1/T₁ in µs⁻¹.
        gamma2_ramsey : float, optional
            Ramsey dephasing rate Γ₂ = 1/T₂ in µs⁻¹.
        gamma2_echo : float, optional
            Echo dephasing rate in µs⁻¹.  Stored only.
        direction : str, optional
            Sweep direction tag, 'up' (default) or 'down'.
        """
        b = float(b)
        if not np.isfinite(b):
            raise ValidationError(f'b must be finite, got {b}')
        if direction not in self.directions:
            raise ValidationError(f'direction must be one of {self.directions}, got {direction!r}')
        self.__b = b
        self.__gamma1 = self.__rate('gamma1', gamma1)
        self.__gamma2_ramsey = self.__rate('gamma2_ramsey', gamma2_ramsey)
        self.__gamma2_echo = self.__rate('gamma2_echo', gamma2_echo)
        self.__direction = direction

    @staticmethod
    def __rate(name: str, value: Optional[float]) -> Optional[float]:
        if value is None:
            return None
        value = float(value)
        if np.isnan(value):
            return None
        if not 0 <= value < np.inf:
            raise ValidationError(f'{name} must be finite and non-negative, got {value}')
        return value

    def __repr__(self) -> str:
        return (f'CoherenceSample(b={self.b}, gamma1={self.gamma1}, '
                f'gamma2_ramsey={self.gamma2_ramsey}, direction={self.direction!r})')

    @property
    def b(self) -> float:
        """float: Applied field in mT"""
        return self.__b

    @property
    def gamma1(self) -> Optional[float]:
        """float or None: Decay rate in µs⁻¹"""
        return self.__gamma1

    @property
    def gamma2_ramsey(self) -> Optional[float]:
        """float or None: Ramsey dephasing rate in µs⁻¹"""
        return self.__gamma2_ramsey

    @property
    def gamma2_echo(self) -> Optional[float]:
        """float or None: Echo dephasing rate in µs⁻¹"""
        return self.__gamma2_echo

    @property
    def direction(self) -> str:
        """str: Sweep direction tag"""
        return self.__direction

    @property
    def gamma_phi(self) -> Optional[float]:
        """float or None: Pure dephasing Γ₂ - Γ₁/2 in µs⁻¹, None unless both rates are present"""
        if self.gamma1 is None or self.gamma2_ramsey is None:
            return None
        return self.gamma2_ramsey - self.gamma1 / 2

    @property
    def physical(self) -> bool:
        """bool: False only if the pure dephasing comes out negative"""
        gamma_phi = self.gamma_phi
        return gamma_phi is None or gamma_phi >= 0

    def check(self):
        """
        Issues an UnphysicalDephasingWarning if the sample is not physical.
        """
        if not self.physical:
            warnings.warn(f'negative pure dephasing {self.gamma_phi:.6g} per us at b={self.b} mT',
                          UnphysicalDephasingWarning)

    def metadata(self) -> dict:
        """
        Generates a dict of the sample in sweep-table column names.
        """
        return {
            'b_mT': self.b,
            'gamma1_per_us': np.nan if self.gamma1 is None else self.gamma1,
            'gamma2_per_us': np.nan if self.gamma2_ramsey is None else self.gamma2_ramsey,
            'gamma2_echo_per_us': np.nan if self.gamma2_echo is None else self.gamma2_echo,
            'direction': self.direction,
        }
