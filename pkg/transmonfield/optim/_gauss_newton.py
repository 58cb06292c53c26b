# coding: utf-8
# Standard Python libraries
import logging
from typing import Callable, Optional, Tuple

# https://numpy.org/
import numpy as np

# https://scipy.org/
import scipy.linalg

# Local imports
from .FitResult import FitResult
from .OptimizerConfig import OptimizerConfig

logger = logging.getLogger(__name__)

LAMBDA_START = 1e-3
LAMBDA_FACTOR = 10.0
LAMBDA_MIN = 1e-12
LAMBDA_MAX = 1e16

def _residuals(fun: Callable[[np.ndarray], np.ndarray],
               x: np.ndarray) -> Tuple[np.ndarray, float]:
    """Residual vector and its squared norm, inf if anything is non-finite"""
    r = np.asarray(fun(x), dtype=float).reshape(-1)
    if not np.all(np.isfinite(r)):
        return r, np.inf
    return r, float(r @ r)

def forward_jacobian(fun: Callable[[np.ndarray], np.ndarray],
                     x: np.ndarray,
                     r: np.ndarray) -> np.ndarray:
    """
    Forward-difference Jacobian with per-parameter step 1e-6·(1 + |x|).
    Columns where the stepped residuals are not finite are set to zero.
    """
    jac = np.zeros((len(r), len(x)))
    for j in range(len(x)):
        h = 1e-6 * (1.0 + abs(x[j]))
        xh = np.array(x, copy=True)
        xh[j] += h
        rh = np.asarray(fun(xh), dtype=float).reshape(-1)
        if np.all(np.isfinite(rh)):
            jac[:, j] = (rh - r) / h
        else:
            logger.debug('non-finite residuals stepping parameter %d; column zeroed', j)
    return jac

def _damped_step(jtj: np.ndarray,
                 jtr: np.ndarray,
                 lam: float) -> np.ndarray:
    """Solves (JᵀJ + λ·diag(JᵀJ))δ = -Jᵀr"""
    diag = np.diag(jtj).copy()
    floor = max(diag.max(initial=0.0), 1.0) * 1e-15
    diag[diag < floor] = floor
    lhs = jtj + lam * np.diag(diag)
    try:
        return scipy.linalg.solve(lhs, -jtr, assume_a='sym')
    except (scipy.linalg.LinAlgError, ValueError):
        return np.linalg.lstsq(lhs, -jtr, rcond=None)[0]

def covariance(jac: np.ndarray,
               objective: float) -> Optional[np.ndarray]:
    """
    Covariance estimate s²(JᵀJ)⁻¹ with s² the objective per degree of
    freedom.  None if there are no spare degrees of freedom.
    """
    m, n = jac.shape
    if m <= n:
        return None
    return objective / (m - n) * np.linalg.pinv(jac.T @ jac)

def gauss_newton(fun: Callable[[np.ndarray], np.ndarray],
                 x0: np.ndarray,
                 config: OptimizerConfig) -> FitResult:
    """
    Damped Gauss-Newton (Levenberg-Marquardt) minimization of a sum of
    squared residuals.

    Parameters
    ----------
    fun : callable
        Returns the residual vector for a parameter vector.  Non-finite
        residuals reject the trial point.
    x0 : numpy.NDArray
        Starting point.  Residuals must be finite there.
    config : OptimizerConfig
        Budget and tolerances.  A search is converged when the accepted
        step is below config.param_tol relative to |x|, when the accepted
        decrease is below config.objective_tol, or when no damping yields a
        decrease.

    Returns
    -------
    FitResult
        Residual is the sum of squares at the returned parameters.
    """
    x = np.array(x0, dtype=float)
    r, f = _residuals(fun, x)
    lam = LAMBDA_START

    iterations = 0
    converged = False
    message = 'iteration budget exhausted'
    while iterations < config.max_iterations and not converged:
        iterations += 1
        jac = forward_jacobian(fun, x, r)
        jtj = jac.T @ jac
        jtr = jac.T @ r

        while True:
            step = _damped_step(jtj, jtr, lam)
            x_new = x + step
            r_new, f_new = _residuals(fun, x_new)
            if f_new < f:
                break
            lam *= LAMBDA_FACTOR
            if lam > LAMBDA_MAX:
                converged = True
                message = 'no damping gives a further decrease'
                break

        if converged:
            break

        decrease = f - f_new
        x, r, f = x_new, r_new, f_new
        lam = max(lam / LAMBDA_FACTOR, LAMBDA_MIN)
        logger.debug('gauss-newton iteration %d: objective %.12g, lambda %.3g',
                     iterations, f, lam)

        if np.linalg.norm(step) <= config.param_tol * (np.linalg.norm(x) + config.param_tol):
            converged = True
            message = 'step size below param_tol'
        elif decrease < config.objective_tol:
            converged = True
            message = 'objective decrease below objective_tol'

    cov = covariance(forward_jacobian(fun, x, r), f)

    return FitResult(params=x, residual=f, iterations=iterations, converged=converged,
                     covariance_estimate=cov, method='gauss-newton-damped',
                     message=message, n_points=len(r))
