# coding: utf-8
# Standard Python libraries
from typing import Union

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# https://scipy.org/
import scipy.constants as cs

# Local imports
from ..errors import ValidationError

__all__ = ['current_phase', 'anharmonicity_coefficient',
           'effective_josephson_energy', 'josephson_energy_from_current',
           'critical_current_from_energy']

def _sorted_pair(a: float, b: float, name: str = 'value'):
    """Validates a pair of non-negative finite values and returns (lo, hi)"""
    a = float(a)
    b = float(b)
    if not (np.isfinite(a) and np.isfinite(b)):
        raise ValidationError(f'{name} values must be finite, got {a} and {b}')
    if a < 0 or b < 0:
        raise ValidationError(f'{name} values must be non-negative, got {a} and {b}')
    return min(a, b), max(a, b)

def current_phase(phi_total: npt.ArrayLike,
                  ic1: float,
                  ic2: float) -> Union[float, np.ndarray]:
    """
    Supercurrent through two Josephson junctions in series as a function of
    the total phase drop across both.

    Parameters
    ----------
    phi_total : float or array-like
        The total phase φ_Σ in radians.
    ic1 : float
        Critical current of the first junction (any consistent unit).
    ic2 : float
        Critical current of the second junction.

    Returns
    -------
    float or numpy.NDArray
        I(φ_Σ) = I_c,big·sin(arctan(sin φ_Σ / (r + cos φ_Σ))) with
        r = I_c,big/I_c,small ≥ 1.  If one critical current is zero, no
        supercurrent flows and zeros are returned.

    Raises
    ------
    ValidationError
        If any input is non-finite, a critical current is negative, or both
        critical currents are zero.
    """
    lo, hi = _sorted_pair(ic1, ic2, 'critical current')
    if hi == 0:
        raise ValidationError('both critical currents are zero')

    phi = np.asarray(phi_total, dtype=float)
    if not np.all(np.isfinite(phi)):
        raise ValidationError('phi_total must be finite')

    if lo == 0:
        current = np.zeros_like(phi)
    else:
        r = hi / lo
        current = hi * np.sin(np.arctan2(np.sin(phi), r + np.cos(phi)))

    if current.ndim == 0:
        return float(current)
    return current

def anharmonicity_coefficient(r: float) -> float:
    """
    Prefactor of the anharmonic term for a two-junction transmon,
    (r² - r + 1)/(r + 1)².  Equal to 1/4 for identical junctions and to 1 in
    the single-junction limit.

    Parameters
    ----------
    r : float
        Ratio of the two Josephson energies.  Either ordering may be given as
        the value is symmetric under r -> 1/r.  numpy.inf is accepted.

    Returns
    -------
    float
        The anharmonicity coefficient.

    Raises
    ------
    ValidationError
        If r is not positive or is nan.
    """
    r = float(r)
    if not r > 0:
        raise ValidationError(f'ratio r must be positive, got {r}')

    # Evaluate on q = min(r, 1/r) so that r and 1/r give identical floats
    q = min(r, 1.0 / r)
    return (q * q - q + 1.0) / (q + 1.0)**2

def effective_josephson_energy(ej1: float,
                               ej2: float) -> float:
    """
    Series combination E_J,1·E_J,2/(E_J,1 + E_J,2) = E_J,lim·r/(r + 1) of
    two Josephson energies.  Zero if either energy is zero.
    """
    lo, hi = _sorted_pair(ej1, ej2, 'Josephson energy')
    if lo == 0:
        return 0.0
    return lo / (1.0 + lo / hi)

def josephson_energy_from_current(ic: npt.ArrayLike) -> Union[float, np.ndarray]:
    """
    Converts critical current to Josephson energy,
    E_J/h = I_c·Φ₀/(2π h) = I_c/(4π e).

    Parameters
    ----------
    ic : float or array-like
        Critical current in nA.

    Returns
    -------
    float or numpy.NDArray
        E_J/h in GHz.
    """
    ej = np.asarray(ic, dtype=float) * 1e-9 / (4 * np.pi * cs.e) * 1e-9
    if ej.ndim == 0:
        return float(ej)
    return ej

def critical_current_from_energy(ej: npt.ArrayLike) -> Union[float, np.ndarray]:
    """
    Converts Josephson energy E_J/h in GHz to critical current in nA.  The
    inverse of josephson_energy_from_current.
    """
    ic = np.asarray(ej, dtype=float) * 1e9 * (4 * np.pi * cs.e) * 1e9
    if ic.ndim == 0:
        return float(ic)
    return ic
