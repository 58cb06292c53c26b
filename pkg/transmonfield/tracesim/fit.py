# coding: utf-8
# Standard Python libraries
import logging
from typing import Dict, Optional, Union
import warnings

# https://numpy.org/
import numpy as np

# Local imports
from ..errors import ValidationError
from ..optim import OptimizerConfig, minimize
from .kinds import TraceKind, get_kind
from .Trace import Trace

__all__ = ['TraceFit', 'fit_trace']

logger = logging.getLogger(__name__)

class TraceFit():
    """
    Fitted parameters of one trace.
    """
    def __init__(self,
                 kind: str,
                 params: Dict[str, float],
                 residual: float,
                 converged: bool,
                 iterations: int,
                 stderr: Optional[Dict[str, float]] = None):
        self.__kind = kind
        self.__params = dict(params)
        self.__residual = float(residual)
        self.__converged = bool(converged)
        self.__iterations = int(iterations)
        self.__stderr = stderr

    def __repr__(self) -> str:
        values = ', '.join(f'{k}={v:.6g}' for k, v in self.params.items())
        return f'TraceFit({self.kind}: {values}, converged={self.converged})'

    def __getitem__(self, name: str) -> float:
        return self.__params[name]

    @property
    def kind(self) -> str:
        """str: Trace kind"""
        return self.__kind

    @property
    def params(self) -> Dict[str, float]:
        """dict: Fitted parameters by name"""
        return self.__params

    @property
    def residual(self) -> float:
        """float: Sum of squared residuals"""
        return self.__residual

    @property
    def converged(self) -> bool:
        """bool: False flags a partial result"""
        return self.__converged

    @property
    def iterations(self) -> int:
        """int: Optimizer iterations"""
        return self.__iterations

    @property
    def stderr(self) -> Optional[Dict[str, float]]:
        """dict or None: Standard errors by parameter name"""
        return self.__stderr

    def metadata(self) -> dict:
        """
        Generates a dict of simple metadata values.
        """
        meta = {'kind': self.kind}
        meta.update(self.params)
        meta['residual'] = self.residual
        meta['converged'] = self.converged
        return meta

def fit_trace(kind: Union[str, TraceKind],
              trace: Trace,
              config: Optional[OptimizerConfig] = None) -> TraceFit:
    """
    Least-squares fit of a trace kind's model to a trace.

    The initial guess comes from heuristics: a log-linear slope for t1, the
    FFT peak and the RMS decay between trace halves for rabi and ramsey,
    and the dip position, depth and half-depth width for resonator.  Each
    parameter is then fitted as guess + scale·(u - 1) starting from u = 1.

    Parameters
    ----------
    kind : str or TraceKind
        The trace kind.
    trace : Trace
        Sampled data.  x must be evenly spaced for rabi and ramsey.
    config : OptimizerConfig, optional
        Budget and tolerances for the damped Gauss-Newton search.

    Returns
    -------
    TraceFit
        The fitted parameters.  If the search did not converge the result is
        still returned, flagged with converged=False and a warning.
    """
    kind = get_kind(kind)
    n_params = len(kind.parameter_names)
    if len(trace) < n_params + 2:
        raise ValidationError(f'{kind.name} fit needs at least {n_params + 2} points, '
                              f'got {len(trace)}')

    x = trace.x
    y = trace.y
    guess = kind.guess(x, y)
    if not kind.valid(guess):
        raise ValidationError(f'no usable initial guess for the {kind.name} trace: {guess}')
    scale = kind.scales(guess)
    logger.debug('%s initial guess %s', kind.name, kind.as_dict(guess))

    def params_of(u: np.ndarray) -> np.ndarray:
        return guess + scale * (u - 1.0)

    def residuals(u: np.ndarray) -> np.ndarray:
        values = params_of(u)
        if not kind.valid(values):
            return np.full(len(x), np.nan)
        return kind.model(x, values) - y

    result = minimize(residuals, np.ones(n_params), config, method='gauss-newton-damped')
    values = params_of(result.params)

    stderr = None
    if result.covariance_estimate is not None:
        stderr = kind.as_dict(scale * np.sqrt(np.abs(np.diag(result.covariance_estimate))))

    if not result.converged:
        warnings.warn(f'{kind.name} fit did not converge in {result.iterations} iterations; '
                      'returning the partial result')

    return TraceFit(kind=kind.name, params=kind.as_dict(values), residual=result.residual,
                    converged=result.converged, iterations=result.iterations, stderr=stderr)
