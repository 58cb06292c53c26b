# coding: utf-8
# Standard Python libraries
import logging

# https://numpy.org/
import numpy as np

# Local imports
from ..errors import ConvergenceError, ValidationError
from ..tools import central_derivative
from ..field import FieldModel
from .NoiseSpec import NoiseSpec

__all__ = ['field_derivative', 'frequency_slope_vs_current', 'calibrate_coil_constant']

logger = logging.getLogger(__name__)

def _check_nodes(field_model: FieldModel,
                 b: float,
                 step: float):
    """Raises if a sinc node n ≠ 0 lies within [b - step, b + step]"""
    for name, params in (('jj1', field_model.jj1), ('jj2', field_model.jj2)):
        if field_model.model == 'gap' and field_model.gap_junction == int(name[-1]):
            continue
        if not np.isfinite(params.b_phi0):
            continue
        lo = (b - step - params.b_delta) / params.b_phi0
        hi = (b + step - params.b_delta) / params.b_phi0
        for n in range(int(np.ceil(lo)), int(np.floor(hi)) + 1):
            if n != 0:
                raise ValidationError(f'b={b} mT is at a sinc node of {name} '
                                      f'(n={n}); the slope is undefined')

def field_derivative(field_model: FieldModel,
                     b: float,
                     step: float = 0.01,
                     rel_tol: float = 1e-4,
                     max_halvings: int = 8,
                     abs_tol: float = 1e-9) -> float:
    """
    dν01/dB in GHz/mT by central differences, halving the step until two
    successive estimates agree.

    Parameters
    ----------
    field_model : FieldModel
        The field-to-frequency model.
    b : float
        Field in mT.
    step : float, optional
        Initial half-width of the stencil in mT.  Default value is 0.01.
    rel_tol : float, optional
        Relative agreement required between successive estimates.  Default
        value is 1e-4.
    max_halvings : int, optional
        Maximum number of step halvings.  Default value is 8.
    abs_tol : float, optional
        Absolute agreement in GHz/mT accepted near stationary points.
        Default value is 1e-9.

    Returns
    -------
    float
        The signed derivative.
    """
    b = float(b)
    _check_nodes(field_model, b, step)

    estimate = central_derivative(field_model.nu01, b, step)
    for _ in range(max_halvings):
        step /= 2
        finer = central_derivative(field_model.nu01, b, step)
        scale = max(abs(finer), abs(estimate))
        agree = abs(finer - estimate) <= rel_tol * scale + abs_tol
        estimate = finer
        if agree:
            return estimate
    raise ConvergenceError(f'frequency slope at b={b} mT did not settle within '
                           f'{max_halvings} step halvings')

def frequency_slope_vs_current(field_model: FieldModel,
                               b: float,
                               noise: NoiseSpec,
                               step: float = 0.01) -> float:
    """
    Slope of the angular qubit frequency with respect to coil current,
    ∂ω01/∂I = 2π·(∂ν01/∂B)·dB/dI.

    Parameters
    ----------
    field_model : FieldModel
        The field-to-frequency model.
    b : float
        Field in mT.
    noise : NoiseSpec
        Supplies the coil constant.
    step : float, optional
        Initial finite-difference half-width in mT.  Default value is 0.01.

    Returns
    -------
    float
        |∂ω01/∂I| in rad·s⁻¹/A.

    Raises
    ------
    ValidationError
        If b sits at a sinc node of either junction.
    """
    dnu_db = field_derivative(field_model, b, step=step)
    slope = 2 * np.pi * abs(dnu_db) * 1e9 * noise.coil_constant
    logger.debug('dnu01/dB = %.6g GHz/mT at b = %g mT', dnu_db, b)
    return slope

def calibrate_coil_constant(field_model: FieldModel,
                            b: float = 21.0,
                            target_mhz_per_a: float = 652.0,
                            step: float = 0.01) -> float:
    """
    Solves for the coil constant at which the model slope (∂ω01/∂I)/2π at b
    equals a target.

    Parameters
    ----------
    field_model : FieldModel
        The field-to-frequency model.
    b : float, optional
        Field in mT.  Default value is 21.
    target_mhz_per_a : float, optional
        Target (∂ω01/∂I)/2π in MHz/A.  Default value is 652.
    step : float, optional
        Initial finite-difference half-width in mT.

    Returns
    -------
    float
        The coil constant in mT/A.
    """
    target_mhz_per_a = float(target_mhz_per_a)
    if not target_mhz_per_a > 0:
        raise ValidationError(f'target slope must be positive, got {target_mhz_per_a}')
    dnu_db = abs(field_derivative(field_model, b, step=step))
    if dnu_db == 0:
        raise ValidationError(f'frequency is stationary at b={b} mT; no coil constant '
                              'gives a nonzero slope')
    return target_mhz_per_a * 1e-3 / dnu_db
