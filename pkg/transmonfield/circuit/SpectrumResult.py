# coding: utf-8
# https://numpy.org/
import numpy as np
import numpy.typing as npt

__all__ = ['SpectrumResult']

class SpectrumResult():
    """
    Lowest energy levels of a two-junction transmon, in GHz (E/h), with the
    ground state at zero.
    """
    def __init__(self,
                 levels: npt.ArrayLike,
                 omega01: float,
                 omega12: float,
                 regime_valid: bool,
                 ej_eff: float,
                 method: str):
        """
        Class initializer.

        Parameters
        ----------
        levels : array-like
            The lowest eigenvalues, ground state shifted to 0.
        omega01 : float
            The 0-1 transition frequency in GHz.
        omega12 : float
            The 1-2 transition frequency in GHz.
        regime_valid : bool
            True if the effective E_J/E_C reaches the transmon threshold.
        ej_eff : float
            The series-combined Josephson energy in GHz.
        method : str
            'approx' or 'exact'.
        """
        self.__levels = np.asarray(levels, dtype=float)
        self.__omega01 = float(omega01)
        self.__omega12 = float(omega12)
        self.__regime_valid = bool(regime_valid)
        self.__ej_eff = float(ej_eff)
        self.__method = str(method)

    def __repr__(self) -> str:
        return (f'SpectrumResult(method={self.method!r}, omega01={self.omega01:.6g}, '
                f'omega12={self.omega12:.6g}, regime_valid={self.regime_valid})')

    @property
    def levels(self) -> np.ndarray:
        """numpy.NDArray: Level energies in GHz, ground state at 0"""
        return self.__levels

    @property
    def omega01(self) -> float:
        """float: The 0-1 transition frequency in GHz"""
        return self.__omega01

    @property
    def omega12(self) -> float:
        """float: The 1-2 transition frequency in GHz"""
        return self.__omega12

    @property
    def anharmonicity(self) -> float:
        """float: ω12 - ω01 in GHz, negative in the transmon regime"""
        return self.omega12 - self.omega01

    @property
    def regime_valid(self) -> bool:
        """bool: Whether the effective E_J/E_C reaches the transmon threshold"""
        return self.__regime_valid

    @property
    def ej_eff(self) -> float:
        """float: The series-combined Josephson energy in GHz"""
        return self.__ej_eff

    @property
    def method(self) -> str:
        """str: How the levels were obtained"""
        return self.__method

    def metadata(self) -> dict:
        """
        Generates a dict of simple metadata values associated with the
        spectrum.  Useful for building pandas.DataFrames over sweeps.
        """
        return {
            'nu01_GHz': self.omega01,
            'nu12_GHz': self.omega12,
            'anharmonicity_GHz': self.anharmonicity,
            'ej_eff_GHz': self.ej_eff,
            'regime_valid': self.regime_valid,
            'method': self.method,
        }
