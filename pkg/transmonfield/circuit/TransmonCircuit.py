# coding: utf-8

# https://numpy.org/
import numpy as np

# Local imports
from ..errors import ValidationError
from .current_phase import anharmonicity_coefficient, effective_josephson_energy

__all__ = ['TransmonCircuit']

class TransmonCircuit():
    """
    A fixed-frequency transmon whose Josephson element is two tunnel
    junctions in series.  All energies are ordinary frequencies E/h in GHz.
    """
    # Class imports
    from ._approx import approx_levels
    from ._exact import exact_levels

    def __init__(self,
                 e_c: float,
                 ej1: float,
                 ej2: float):
        """
        Class initializer.

        Parameters
        ----------
        e_c : float
            Charging energy E_C/h in GHz.  Must be positive.
        ej1 : float
            Josephson energy E_J,1/h in GHz.  Must be non-negative.
        ej2 : float
            Josephson energy E_J,2/h in GHz.  Must be non-negative.
        """
        self.e_c = e_c
        self.ej1 = ej1
        self.ej2 = ej2

    def __repr__(self) -> str:
        return f'TransmonCircuit(e_c={self.e_c}, ej1={self.ej1}, ej2={self.ej2})'

    @staticmethod
    def __check(name: str, value: float, positive: bool = False) -> float:
        value = float(value)
        if not np.isfinite(value):
            raise ValidationError(f'{name} must be finite, got {value}')
        if positive and not value > 0:
            raise ValidationError(f'{name} must be positive, got {value}')
        if value < 0:
            raise ValidationError(f'{name} must be non-negative, got {value}')
        return value

    @property
    def e_c(self) -> float:
        """float: Charging energy E_C/h in GHz"""
        return self.__e_c

    @e_c.setter
    def e_c(self, value: float):
        self.__e_c = self.__check('e_c', value, positive=True)

    @property
    def ej1(self) -> float:
        """float: Josephson energy of the first junction in GHz"""
        return self.__ej1

    @ej1.setter
    def ej1(self, value: float):
        self.__ej1 = self.__check('ej1', value)

    @property
    def ej2(self) -> float:
        """float: Josephson energy of the second junction in GHz"""
        return self.__ej2

    @ej2.setter
    def ej2(self, value: float):
        self.__ej2 = self.__check('ej2', value)

    @property
    def ej_lim(self) -> float:
        """float: The smaller, current-limiting Josephson energy"""
        return min(self.ej1, self.ej2)

    @property
    def r(self) -> float:
        """float: max(ej1, ej2)/min(ej1, ej2); inf with one junction at zero, nan with both"""
        lo = self.ej_lim
        hi = max(self.ej1, self.ej2)
        if hi == 0:
            return np.nan
        if lo == 0:
            return np.inf
        return hi / lo

    @property
    def ej_eff(self) -> float:
        """float: Series-combined Josephson energy E_J,lim·r/(r+1) in GHz"""
        return effective_josephson_energy(self.ej1, self.ej2)

    @property
    def anharmonicity_coefficient(self) -> float:
        """float: (r² - r + 1)/(r + 1)², 1 when either junction is absent"""
        r = self.r
        if np.isnan(r):
            return 1.0
        return anharmonicity_coefficient(r)

    def swapped(self) -> 'TransmonCircuit':
        """Returns a copy with the two junctions exchanged"""
        return TransmonCircuit(self.e_c, self.ej2, self.ej1)

    def metadata(self) -> dict:
        """
        Generates a dict of simple metadata values associated with the circuit.
        """
        return {
            'e_c_GHz': self.e_c,
            'ej1_GHz': self.ej1,
            'ej2_GHz': self.ej2,
            'ej_eff_GHz': self.ej_eff,
            'r': self.r,
        }
