# coding: utf-8
# Standard Python libraries
import warnings

# https://numpy.org/
import numpy as np

# Local imports
from ..errors import ValidationError, UnphysicalDephasingWarning

__all__ = ['pure_dephasing', 'flux_noise_dephasing']

def pure_dephasing(gamma1: float,
                   gamma2_ramsey: float) -> float:
    """
    Pure dephasing rate Γφ = Γ₂ - Γ₁/2.

    Parameters
    ----------
    gamma1 : float
        Decay rate, any rate unit.
    gamma2_ramsey : float
        Ramsey dephasing rate in the same unit.

    Returns
    -------
    float
        Γφ in the unit of the inputs.  A negative value is returned as is
        with an UnphysicalDephasingWarning.
    """
    gamma1 = float(gamma1)
    gamma2_ramsey = float(gamma2_ramsey)
    if not (0 <= gamma1 < np.inf and 0 <= gamma2_ramsey < np.inf):
        raise ValidationError(f'rates must be finite and non-negative, got {gamma1} and {gamma2_ramsey}')

    gamma_phi = gamma2_ramsey - gamma1 / 2
    if gamma_phi < 0:
        warnings.warn(f'unphysical sample: gamma2 {gamma2_ramsey} is below gamma1/2 {gamma1 / 2}',
                      UnphysicalDephasingWarning)
    return gamma_phi

def flux_noise_dephasing(slope_omega_per_current: float,
                         s_i: float) -> float:
    """
    Dephasing from low-frequency current noise in the field coil,
    Γφ = π(∂ω01/∂I)²S_I.

    Parameters
    ----------
    slope_omega_per_current : float
        ∂ω01/∂I in rad·s⁻¹/A.
    s_i : float
        Current noise PSD in A²/Hz.

    Returns
    -------
    float
        Γφ in s⁻¹.
    """
    s_i = float(s_i)
    if not 0 <= s_i < np.inf:
        raise ValidationError(f's_i must be finite and non-negative, got {s_i}')
    return np.pi * float(slope_omega_per_current)**2 * s_i
