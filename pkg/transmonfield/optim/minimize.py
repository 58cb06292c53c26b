# coding: utf-8
# Standard Python libraries
import logging
from typing import Callable, Optional, Union

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# Local imports
from ..errors import ValidationError
from .FitResult import FitResult
from .OptimizerConfig import OptimizerConfig
from ._simplex import simplex
from ._gauss_newton import gauss_newton

__all__ = ['minimize', 'methods']

logger = logging.getLogger(__name__)

methods = ('simplex', 'gauss-newton-damped')

def minimize(fun: Callable[[np.ndarray], Union[float, np.ndarray]],
             x0: npt.ArrayLike,
             config: Optional[OptimizerConfig] = None,
             method: str = 'simplex') -> FitResult:
    """
    Minimizes an objective from a starting point.

    Parameters
    ----------
    fun : callable
        For 'simplex', the scalar objective.  For 'gauss-newton-damped', the
        residual vector whose squared norm is the objective.
    x0 : array-like
        Starting parameter vector.
    config : OptimizerConfig, optional
        Budget and tolerances.  Default values are used if not given.
    method : str, optional
        'simplex' (default) or 'gauss-newton-damped'.

    Returns
    -------
    FitResult
        Best parameters found.  converged is False if the iteration budget
        ran out first.

    Raises
    ------
    ValueError
        If the objective is not finite at x0.
    """
    if config is None:
        config = OptimizerConfig()
    if method not in methods:
        raise ValidationError(f'method must be one of {methods}, got {method!r}')

    x0 = np.array(x0, dtype=float).reshape(-1)
    if len(x0) == 0:
        raise ValidationError('x0 must contain at least one parameter')

    value = np.asarray(fun(x0), dtype=float)
    if not np.all(np.isfinite(value)):
        raise ValueError('objective is not finite at the starting point')

    if method == 'simplex':
        result = simplex(fun, x0, config)
    else:
        result = gauss_newton(fun, x0, config)

    logger.debug('%s finished after %d iterations (%s)', method, result.iterations,
                 result.message)
    return result
