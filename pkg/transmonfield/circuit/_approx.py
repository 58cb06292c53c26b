# coding: utf-8
# Standard Python libraries
from typing import Optional, Tuple

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# Local imports
from ..errors import ValidationError
from ..Settings import settings
from .SpectrumResult import SpectrumResult

def approx_transitions(e_c: npt.ArrayLike,
                       ej1: npt.ArrayLike,
                       ej2: npt.ArrayLike
                       ) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Vectorized closed-form transitions of the two-junction transmon.  Used
    directly by field sweeps and fits where a SpectrumResult per point would
    be wasteful.

    Parameters
    ----------
    e_c : float or array-like
        Charging energy E_C/h in GHz.
    ej1 : float or array-like
        Josephson energy of the first junction in GHz.
    ej2 : float or array-like
        Josephson energy of the second junction in GHz.

    Returns
    -------
    omega01 : numpy.NDArray
        The 0-1 transition frequencies in GHz.
    omega12 : numpy.NDArray
        The 1-2 transition frequencies in GHz.
    ej_eff : numpy.NDArray
        The series-combined Josephson energies in GHz.
    """
    e_c, ej1, ej2 = np.broadcast_arrays(np.asarray(e_c, dtype=float),
                                        np.asarray(ej1, dtype=float),
                                        np.asarray(ej2, dtype=float))
    lo = np.minimum(ej1, ej2)
    hi = np.maximum(ej1, ej2)

    # q = 1/r in [0, 1]; both junctions at zero is a node with coefficient 1
    with np.errstate(divide='ignore', invalid='ignore'):
        q = np.where(hi > 0, lo / np.where(hi > 0, hi, 1.0), 0.0)
    coef = (q * q - q + 1.0) / (q + 1.0)**2
    ej_eff = lo / (1.0 + q)

    harmonic = np.sqrt(8.0 * e_c * ej_eff)
    omega01 = harmonic - coef * e_c
    omega12 = harmonic - 2.0 * coef * e_c

    return omega01, omega12, ej_eff

def approx_levels(self,
                  n_levels: int = 3,
                  regime_threshold: Optional[float] = None,
                  strict_nodes: bool = False) -> SpectrumResult:
    """
    Energy levels from the approximate two-junction transmon Hamiltonian,
    E_n/h = sqrt(8 E_C E_J,lim r/(r+1))·n - ((r² - r + 1)/(r + 1)²)(E_C/2)n(n+1).

    Parameters
    ----------
    n_levels : int, optional
        Number of levels to return, at least 2.  Default value is 3.
    regime_threshold : float, optional
        Minimum effective E_J/E_C for regime_valid.  Default value is taken
        from settings.
    strict_nodes : bool, optional
        If True, a vanishing effective E_J raises an error instead of
        returning a result flagged as outside the transmon regime.  Default
        value is False.

    Returns
    -------
    SpectrumResult
        The levels and transitions.

    Raises
    ------
    ValidationError
        If n_levels < 2, or strict_nodes is True and the effective E_J is 0.
    """
    n_levels = int(n_levels)
    if n_levels < 2:
        raise ValidationError(f'n_levels must be at least 2, got {n_levels}')
    if regime_threshold is None:
        regime_threshold = settings.regime_threshold

    ej_eff = self.ej_eff
    if ej_eff == 0 and strict_nodes:
        raise ValidationError('effective Josephson energy is zero (sinc node)')

    coef = self.anharmonicity_coefficient
    harmonic = np.sqrt(8.0 * self.e_c * ej_eff)
    n = np.arange(n_levels)
    levels = harmonic * n - coef * (self.e_c / 2.0) * n * (n + 1)

    return SpectrumResult(levels=levels,
                          omega01=harmonic - coef * self.e_c,
                          omega12=harmonic - 2.0 * coef * self.e_c,
                          regime_valid=ej_eff / self.e_c >= regime_threshold,
                          ej_eff=ej_eff,
                          method='approx')
