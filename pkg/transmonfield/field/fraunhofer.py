# coding: utf-8
# Standard Python libraries
from typing import Tuple, Union

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# Local imports
from ..errors import ValidationError

__all__ = ['fraunhofer_scale', 'fraunhofer_ic', 'gap_suppressed_ic',
           'perpendicular_component']

def _finite(b: npt.ArrayLike) -> np.ndarray:
    b = np.asarray(b, dtype=float)
    if not np.all(np.isfinite(b)):
        raise ValidationError('field values must be finite')
    return b

def _unwrap(value: np.ndarray) -> Union[float, np.ndarray]:
    if value.ndim == 0:
        return float(value)
    return value

def fraunhofer_scale(b: npt.ArrayLike,
                     b_delta: float,
                     b_phi0: float) -> Union[float, np.ndarray]:
    """
    |sin(πx)/(πx)| with x = (b - b_delta)/b_phi0.  Zeros fall exactly at
    b - b_delta = n·b_phi0 for n ≠ 0.
    """
    b = _finite(b)
    return _unwrap(np.abs(np.sinc((b - b_delta) / b_phi0)))

def fraunhofer_ic(params,
                  b: npt.ArrayLike) -> Tuple[Union[float, np.ndarray],
                                             Union[float, np.ndarray]]:
    """
    Fraunhofer suppression of a junction's critical current.

    Parameters
    ----------
    params : JunctionFieldParams
        The junction's field response.
    b : float or array-like
        Applied in-plane field in mT.

    Returns
    -------
    scale : float or numpy.NDArray
        I_c(b)/I_c⁰ in [0, 1].
    ej : float or numpy.NDArray
        E_J(b)/h in GHz.
    """
    scale = fraunhofer_scale(b, params.b_delta, params.b_phi0)
    return scale, params.ej0 * scale

def gap_suppressed_ic(ej0: float,
                      b: npt.ArrayLike,
                      gap) -> Union[float, np.ndarray]:
    """
    Josephson energy reduced by the field-dependent gap,
    E_J(b) = E_J⁰·sqrt(1 - (b/b_c)²).

    Parameters
    ----------
    ej0 : float
        Zero-field E_J/h in GHz.
    b : float or array-like
        Applied field in mT.
    gap : GapModel
        The gap model.

    Returns
    -------
    float or numpy.NDArray
        E_J(b)/h in GHz.

    Raises
    ------
    ValidationError
        If |b| > b_c.
    """
    return _unwrap(float(ej0) * gap.factor(b))

def perpendicular_component(b: npt.ArrayLike,
                            alpha: float) -> Union[float, np.ndarray]:
    """
    Out-of-plane component of a nominally in-plane field for a chip
    misaligned by alpha.

    Parameters
    ----------
    b : float or array-like
        Applied field in mT.
    alpha : float
        Misalignment angle in degrees, 0 to 90.

    Returns
    -------
    float or numpy.NDArray
        b·sin(alpha) in µT.
    """
    alpha = float(alpha)
    if not 0 <= alpha <= 90:
        raise ValidationError(f'alpha must be within [0, 90] degrees, got {alpha}')
    b = _finite(b)
    return _unwrap(b * np.sin(np.deg2rad(alpha)) * 1e3)
