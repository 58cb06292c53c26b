# coding: utf-8
# Standard Python libraries
from typing import Union

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# Local imports
from ..errors import ValidationError
from .JunctionGeometry import JunctionGeometry

__all__ = ['FLUX_QUANTUM', 'junction_length_from_period', 'period_from_length',
           'flux_through_junction']

# Magnetic flux quantum h/2e in Wb
FLUX_QUANTUM = 2.067833848e-15

# nm·mT -> m·T
_AREA_FIELD = 1e-9 * 1e-3

def junction_length_from_period(b_phi0: float,
                                geometry: JunctionGeometry) -> float:
    """
    Junction length for which one flux quantum threads the effective
    cross section (d + 2λ_L)·l at the interference period.

    Parameters
    ----------
    b_phi0 : float
        Field period in mT.
    geometry : JunctionGeometry
        Supplies d and λ_L; its length is ignored.

    Returns
    -------
    float
        l = Φ₀/((d + 2λ_L)·B_Φ0) in nm.
    """
    b_phi0 = float(b_phi0)
    if not 0 < b_phi0 < np.inf:
        raise ValidationError(f'b_phi0 must be positive and finite, got {b_phi0}')
    return FLUX_QUANTUM / (geometry.magnetic_thickness * b_phi0 * _AREA_FIELD) * 1e9

def period_from_length(length: float,
                       geometry: JunctionGeometry) -> float:
    """
    Interference period in mT of a junction with the given length in nm.
    Inverse of junction_length_from_period.
    """
    length = float(length)
    if not 0 < length < np.inf:
        raise ValidationError(f'length must be positive and finite, got {length}')
    return FLUX_QUANTUM / (geometry.magnetic_thickness * length * _AREA_FIELD) * 1e9

def flux_through_junction(b: npt.ArrayLike,
                          geometry: JunctionGeometry) -> Union[float, np.ndarray]:
    """
    Flux through the junction's effective cross section.

    Parameters
    ----------
    b : float or array-like
        Field in mT.
    geometry : JunctionGeometry
        Must have its length set.

    Returns
    -------
    float or numpy.NDArray
        Φ/Φ₀ = b·(d + 2λ_L)·l/Φ₀.
    """
    if geometry.length is None:
        raise ValidationError('geometry.length is required for the flux')
    b = np.asarray(b, dtype=float)
    flux = b * geometry.magnetic_thickness * geometry.length * 1e-9 * _AREA_FIELD / FLUX_QUANTUM
    if flux.ndim == 0:
        return float(flux)
    return flux
