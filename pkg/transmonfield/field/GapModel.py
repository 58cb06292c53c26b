# coding: utf-8

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# https://scipy.org/
import scipy.constants as cs

# Local imports
from ..errors import ValidationError

__all__ = ['GapModel']

class GapModel():
    """
    Suppression of the critical current through the closing superconducting
    gap, Δ(B) = Δ₀·sqrt(1 - (B/B_c)²).
    """
    def __init__(self,
                 b_c: float = 168.0,
                 delta_ratio_mode: bool = True,
                 delta0_ueV: float = 180.0,
                 temperature_mK: float = 30.0):
        """
        Class initializer.

        Parameters
        ----------
        b_c : float, optional
            Critical field in mT.  Default value is 168.
        delta_ratio_mode : bool, optional
            If True (default), I_c ∝ Δ.  If False, the Ambegaokar-Baratoff
            factor Δ·tanh(Δ/2k_BT) is kept, normalized to its zero-field
            value.
        delta0_ueV : float, optional
            Zero-field gap Δ₀ in µeV, only used if delta_ratio_mode is False.
        temperature_mK : float, optional
            Temperature in mK, only used if delta_ratio_mode is False.
        """
        self.b_c = b_c
        self.delta_ratio_mode = delta_ratio_mode
        self.delta0_ueV = delta0_ueV
        self.temperature_mK = temperature_mK

    def __repr__(self) -> str:
        return f'GapModel(b_c={self.b_c}, delta_ratio_mode={self.delta_ratio_mode})'

    @property
    def b_c(self) -> float:
        """float: Critical field in mT"""
        return self.__b_c

    @b_c.setter
    def b_c(self, value: float):
        value = float(value)
        if not 0 < value < np.inf:
            raise ValidationError(f'b_c must be positive and finite, got {value}')
        self.__b_c = value

    @property
    def delta_ratio_mode(self) -> bool:
        """bool: Whether I_c is taken proportional to Δ"""
        return self.__delta_ratio_mode

    @delta_ratio_mode.setter
    def delta_ratio_mode(self, value: bool):
        self.__delta_ratio_mode = bool(value)

    @property
    def delta0_ueV(self) -> float:
        """float: Zero-field gap in µeV"""
        return self.__delta0_ueV

    @delta0_ueV.setter
    def delta0_ueV(self, value: float):
        value = float(value)
        if not value > 0:
            raise ValidationError(f'delta0_ueV must be positive, got {value}')
        self.__delta0_ueV = value

    @property
    def temperature_mK(self) -> float:
        """float: Temperature in mK"""
        return self.__temperature_mK

    @temperature_mK.setter
    def temperature_mK(self, value: float):
        value = float(value)
        if not value > 0:
            raise ValidationError(f'temperature_mK must be positive, got {value}')
        self.__temperature_mK = value

    def factor(self, b: npt.ArrayLike) -> np.ndarray:
        """
        I_c(B)/I_c(0) at field b in mT.

        Raises
        ------
        ValidationError
            If any |b| exceeds b_c.
        """
        b = np.asarray(b, dtype=float)
        if not np.all(np.isfinite(b)):
            raise ValidationError('field values must be finite')
        if np.any(np.abs(b) > self.b_c):
            raise ValidationError(f'|b| exceeds the critical field {self.b_c} mT (gap closed)')

        ratio = np.sqrt(np.clip(1.0 - (b / self.b_c)**2, 0.0, 1.0))
        if self.delta_ratio_mode:
            return ratio

        kt = cs.k / cs.e * 1e6 * self.temperature_mK * 1e-3
        delta = self.delta0_ueV * ratio
        return ratio * np.tanh(delta / (2 * kt)) / np.tanh(self.delta0_ueV / (2 * kt))
