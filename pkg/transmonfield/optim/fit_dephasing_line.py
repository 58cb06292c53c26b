# coding: utf-8
# Standard Python libraries
from typing import Iterable, Tuple, Union
import warnings

# https://numpy.org/
import numpy as np

# Local imports
from ..errors import UnphysicalDephasingWarning, ValidationError
from ..coherence import CoherenceSample

__all__ = ['DephasingLineFit', 'fit_dephasing_line']

class DephasingLineFit():
    """
    Constant pure dephasing from the line Γ₂ = Γ₁/2 + Γφ.
    """
    def __init__(self,
                 gamma_phi: float,
                 half_width: float,
                 n_pairs: int,
                 n_excluded: int = 0):
        self.__gamma_phi = float(gamma_phi)
        self.__half_width = float(half_width)
        self.__n_pairs = int(n_pairs)
        self.__n_excluded = int(n_excluded)

    def __repr__(self) -> str:
        return (f'DephasingLineFit(gamma_phi={self.gamma_phi:.6g} per us, '
                f'half_width={self.half_width:.3g}, n_pairs={self.n_pairs})')

    @property
    def gamma_phi(self) -> float:
        """float: Γφ in µs⁻¹"""
        return self.__gamma_phi

    @property
    def gamma_phi_khz(self) -> float:
        """float: Γφ in kHz"""
        return self.gamma_phi * 1e3

    @property
    def half_width(self) -> float:
        """float: Standard error of Γφ in µs⁻¹, nan for a single pair"""
        return self.__half_width

    @property
    def half_width_defined(self) -> bool:
        """bool: False if the half-width could not be estimated"""
        return bool(np.isfinite(self.half_width))

    @property
    def n_pairs(self) -> int:
        """int: Number of pairs used"""
        return self.__n_pairs

    @property
    def n_excluded(self) -> int:
        """int: Number of unphysical pairs left out"""
        return self.__n_excluded

    def metadata(self) -> dict:
        """
        Generates a dict of simple metadata values.
        """
        return {'gamma_phi_per_us': self.gamma_phi,
                'gamma_phi_kHz': self.gamma_phi_khz,
                'half_width_per_us': self.half_width,
                'half_width_kHz': self.half_width * 1e3,
                'n_pairs': self.n_pairs,
                'n_excluded': self.n_excluded}

def fit_dephasing_line(pairs: Iterable[Union[Tuple[float, float], CoherenceSample]],
                       exclude_unphysical: bool = True) -> DephasingLineFit:
    """
    Least-squares intercept Γφ of Γ₂ = Γ₁/2 + Γφ with the slope held at 1/2,
    which is the mean of Γ₂ - Γ₁/2.

    Parameters
    ----------
    pairs : list
        (gamma1, gamma2_ramsey) tuples in µs⁻¹ or CoherenceSample objects.
        Samples missing either rate are skipped.
    exclude_unphysical : bool, optional
        If True (default), pairs with Γ₂ < Γ₁/2 are left out with an
        UnphysicalDephasingWarning.

    Returns
    -------
    DephasingLineFit
        Γφ with its standard-error half-width.
    """
    values = []
    for pair in pairs:
        if isinstance(pair, CoherenceSample):
            if pair.gamma_phi is None:
                continue
            values.append(pair.gamma_phi)
        else:
            gamma1, gamma2 = pair
            values.append(float(gamma2) - float(gamma1) / 2)
    values = np.array(values, dtype=float)

    if len(values) == 0:
        raise ValidationError('no (gamma1, gamma2) pairs given')
    if not np.all(np.isfinite(values)):
        raise ValidationError('dephasing pairs must be finite')

    n_excluded = 0
    if exclude_unphysical:
        physical = values >= 0
        n_excluded = int(np.sum(~physical))
        if n_excluded > 0:
            warnings.warn(f'{n_excluded} unphysical pairs (gamma2 < gamma1/2) excluded',
                          UnphysicalDephasingWarning)
        values = values[physical]
        if len(values) == 0:
            raise ValidationError('all dephasing pairs are unphysical')

    if len(values) > 1:
        half_width = np.std(values, ddof=1) / np.sqrt(len(values))
    else:
        half_width = np.nan

    return DephasingLineFit(gamma_phi=np.mean(values), half_width=half_width,
                            n_pairs=len(values), n_excluded=n_excluded)
