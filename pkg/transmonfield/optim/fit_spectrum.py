# coding: utf-8
# Standard Python libraries
import logging
from typing import Iterable, Optional, Tuple, Union
import warnings

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# https://pandas.pydata.org/
import pandas as pd

# Local imports
from ..errors import (DegenerateDataError, FitError, RegimeWarning, UnderdeterminedError,
                      ValidationError)
from ..Settings import settings
from ..circuit import approx_transitions
from ..field import FieldModel, JunctionFieldParams
from .FitResult import FitResult
from .OptimizerConfig import OptimizerConfig
from .minimize import minimize

__all__ = ['SPECTRUM_PARAMETERS', 'fit_spectrum', 'spectrum_field_model']

logger = logging.getLogger(__name__)

SPECTRUM_PARAMETERS = ('ej0_1', 'ej0_2', 'b_delta_1', 'b_delta_2',
                       'b_phi0_1', 'b_phi0_2', 'e_c')

def _data_arrays(data: Union[pd.DataFrame, npt.ArrayLike]) -> Tuple[np.ndarray, np.ndarray]:
    if isinstance(data, pd.DataFrame):
        try:
            return (data['b_mT'].to_numpy(dtype=float),
                    data['nu01_GHz'].to_numpy(dtype=float))
        except KeyError as err:
            raise ValidationError('spectrum data need b_mT and nu01_GHz columns') from err
    data = np.asarray(data, dtype=float)
    if data.ndim != 2 or data.shape[1] != 2:
        raise ValidationError('spectrum data must be (b, nu01) pairs')
    return data[:, 0].copy(), data[:, 1].copy()

def _frozen_mask(frozen: Union[None, Iterable[str], dict]) -> np.ndarray:
    if frozen is None:
        frozen = ('e_c',)
    if isinstance(frozen, dict):
        frozen = [name for name, value in frozen.items() if value]
    frozen = list(frozen)
    unknown = set(frozen) - set(SPECTRUM_PARAMETERS)
    if len(unknown) > 0:
        raise ValidationError(f'unknown spectrum parameters {sorted(unknown)}; '
                              f'allowed are {list(SPECTRUM_PARAMETERS)}')
    return np.array([name in frozen for name in SPECTRUM_PARAMETERS])

def _model_nu01(p: np.ndarray,
                b: np.ndarray) -> np.ndarray:
    """ν01 from the closed-form levels for the full parameter vector p"""
    ej0_1, ej0_2, b_delta_1, b_delta_2, b_phi0_1, b_phi0_2, e_c = p
    if b_phi0_1 <= 0 or b_phi0_2 <= 0 or e_c <= 0 or ej0_1 < 0 or ej0_2 < 0:
        return np.full(b.shape, np.nan)
    ej1 = ej0_1 * np.abs(np.sinc((b - b_delta_1) / b_phi0_1))
    ej2 = ej0_2 * np.abs(np.sinc((b - b_delta_2) / b_phi0_2))
    return approx_transitions(e_c, ej1, ej2)[0]

def fit_spectrum(data: Union[pd.DataFrame, npt.ArrayLike],
                 jj1: JunctionFieldParams,
                 jj2: JunctionFieldParams,
                 e_c: float,
                 frozen: Union[None, Iterable[str], dict] = None,
                 config: Optional[OptimizerConfig] = None,
                 regime_threshold: Optional[float] = None) -> FitResult:
    """
    Least-squares fit of the interference field model to measured ν01(B).

    Parameters are normalized by the initial guess before optimization and
    the fit is restarted from config.n_starts points: the guess itself and
    guesses perturbed by 5% normal noise from config.seed.  The best start
    is returned.  Points where the initial model leaves the transmon regime
    (near sinc nodes) are excluded.

    Parameters
    ----------
    data : pandas.DataFrame or array-like
        (b, ν01) pairs in mT and GHz, or a table with b_mT and nu01_GHz
        columns.
    jj1 : JunctionFieldParams
        Initial guess for the first junction.
    jj2 : JunctionFieldParams
        Initial guess for the second junction.
    e_c : float
        Initial guess for E_C/h in GHz.
    frozen : list of str or dict, optional
        Names from SPECTRUM_PARAMETERS held at the initial guess.  Default
        value freezes e_c only.
    config : OptimizerConfig, optional
        Budget, tolerances, seed and number of starts.
    regime_threshold : float, optional
        Minimum effective E_J/E_C of the initial model for a point to be
        fitted.  Default value is taken from settings.

    Returns
    -------
    FitResult
        All seven parameters in SPECTRUM_PARAMETERS order with frozen
        entries at the initial guess.  residual is the sum of squared
        frequency residuals in GHz².

    Raises
    ------
    UnderdeterminedError
        If fewer than (free parameters + 2) points are usable.
    DegenerateDataError
        If an initial period is not positive.
    """
    if config is None:
        config = OptimizerConfig()
    if regime_threshold is None:
        regime_threshold = settings.regime_threshold

    b, nu01 = _data_arrays(data)
    mask_frozen = _frozen_mask(frozen)
    n_free = int(np.sum(~mask_frozen))
    if n_free == 0:
        raise ValidationError('all spectrum parameters are frozen')
    if len(b) < n_free + 2:
        raise UnderdeterminedError(f'{len(b)} data points cannot determine {n_free} free '
                                   f'parameters (need at least {n_free + 2})')

    for name, params in (('jj1', jj1), ('jj2', jj2)):
        if not 0 < params.b_phi0 < np.inf:
            raise DegenerateDataError(f'{name} initial period must be positive and finite, '
                                      f'got {params.b_phi0}')

    p0 = np.array([jj1.ej0, jj2.ej0, jj1.b_delta, jj2.b_delta,
                   jj1.b_phi0, jj2.b_phi0, float(e_c)])

    # Usable points: finite positive data where the initial model is a transmon
    b_safe = np.where(np.isfinite(b), b, 0.0)
    ej1 = jj1.ej(b_safe)
    ej2 = jj2.ej(b_safe)
    ej_eff = approx_transitions(e_c, ej1, ej2)[2]
    usable = np.isfinite(b) & np.isfinite(nu01) & (nu01 > 0) & (ej_eff / e_c >= regime_threshold)
    n_used = int(np.sum(usable))
    if n_used < len(b):
        warnings.warn(f'{len(b) - n_used} of {len(b)} points excluded from the spectrum fit '
                      '(outside the transmon regime or invalid)', RegimeWarning)
    if n_used < n_free + 2:
        raise UnderdeterminedError(f'{n_used} usable data points cannot determine {n_free} '
                                   f'free parameters (need at least {n_free + 2})')
    b_fit = b[usable]
    nu_fit = nu01[usable]

    scale = np.where(p0 != 0, np.abs(p0), 1.0)
    free = ~mask_frozen

    def unpack(u: np.ndarray) -> np.ndarray:
        p = p0.copy()
        p[free] = u * scale[free]
        return p

    def residuals(u: np.ndarray) -> np.ndarray:
        return _model_nu01(unpack(u), b_fit) - nu_fit

    rng = np.random.default_rng(config.seed)
    u0 = p0[free] / scale[free]
    starts = [u0]
    for _ in range(config.n_starts - 1):
        starts.append(u0 * (1.0 + 0.05 * rng.standard_normal(n_free)))

    initial_objective = float(np.sum(residuals(u0)**2))
    best = None
    for i, start in enumerate(starts):
        try:
            result = minimize(residuals, start, config, method='gauss-newton-damped')
        except ValueError as err:
            logger.debug('start %d skipped: %s', i, err)
            continue
        logger.debug('start %d: objective %.12g, converged %s', i, result.residual,
                     result.converged)
        if best is None or result.residual < best.residual:
            best = result
    if best is None:
        raise FitError('no start of the spectrum fit gave a finite objective')
    logger.debug('best objective %.12g against %.12g at the initial guess',
                 best.residual, initial_objective)

    params = unpack(best.params)
    covariance = None
    if best.covariance_estimate is not None:
        covariance = np.zeros((len(p0), len(p0)))
        free_scale = scale[free]
        covariance[np.ix_(free, free)] = (best.covariance_estimate
                                          * np.outer(free_scale, free_scale))

    return FitResult(params=params, residual=best.residual, iterations=best.iterations,
                     converged=best.converged, covariance_estimate=covariance,
                     names=SPECTRUM_PARAMETERS, method=best.method,
                     message=best.message, n_points=n_used)

def spectrum_field_model(result: FitResult,
                         **kwargs) -> FieldModel:
    """
    Builds the interference FieldModel described by a fit_spectrum result.
    Extra keyword arguments are passed to FieldModel.
    """
    p = result.as_dict()
    jj1 = JunctionFieldParams(p['ej0_1'], p['b_delta_1'], p['b_phi0_1'])
    jj2 = JunctionFieldParams(p['ej0_2'], p['b_delta_2'], p['b_phi0_2'])
    return FieldModel(jj1, jj2, p['e_c'], **kwargs)
