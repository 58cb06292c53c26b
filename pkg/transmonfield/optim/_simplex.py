# coding: utf-8
# Standard Python libraries
import logging
from typing import Callable

# https://numpy.org/
import numpy as np

# Local imports
from .FitResult import FitResult
from .OptimizerConfig import OptimizerConfig

logger = logging.getLogger(__name__)

# Reflection, expansion, contraction and shrink coefficients
RHO = 1.0
CHI = 2.0
PSI = 0.5
SIGMA = 0.5

# Initial simplex steps for nonzero and zero coordinates
NONZDELT = 0.05
ZDELT = 0.00025

def simplex(fun: Callable[[np.ndarray], float],
            x0: np.ndarray,
            config: OptimizerConfig) -> FitResult:
    """
    Nelder-Mead downhill simplex minimization of a scalar objective.

    Parameters
    ----------
    fun : callable
        Scalar objective of a parameter vector.  Non-finite values reject
        the trial point.
    x0 : numpy.NDArray
        Starting point.  The objective must be finite there.
    config : OptimizerConfig
        Budget and tolerances.  Convergence requires the simplex diameter
        (largest coordinate offset from the best vertex) to fall below
        config.param_tol.

    Returns
    -------
    FitResult
        The best vertex found.
    """
    def func(x):
        value = float(fun(x))
        if not np.isfinite(value):
            return np.inf
        return value

    N = len(x0)
    sim = np.empty((N + 1, N), dtype=float)
    sim[0] = x0
    for k in range(N):
        y = np.array(x0, copy=True)
        if y[k] != 0:
            y[k] = (1 + NONZDELT) * y[k]
        else:
            y[k] = ZDELT
        sim[k + 1] = y

    fsim = np.array([func(x) for x in sim])

    # sort so sim[0,:] has the lowest function value
    ind = np.argsort(fsim, kind='stable')
    sim = sim[ind]
    fsim = fsim[ind]

    iterations = 0
    converged = False
    message = 'iteration budget exhausted'
    while True:
        diameter = np.max(np.abs(sim[1:] - sim[0]))
        if diameter < config.param_tol:
            converged = True
            message = 'simplex diameter below param_tol'
            break
        if iterations >= config.max_iterations:
            break
        iterations += 1

        xbar = np.sum(sim[:-1], axis=0) / N
        xr = (1 + RHO) * xbar - RHO * sim[-1]
        fxr = func(xr)
        doshrink = False

        if fxr < fsim[0]:
            xe = (1 + RHO * CHI) * xbar - RHO * CHI * sim[-1]
            fxe = func(xe)
            if fxe < fxr:
                sim[-1] = xe
                fsim[-1] = fxe
            else:
                sim[-1] = xr
                fsim[-1] = fxr

        elif fxr < fsim[-2]:
            sim[-1] = xr
            fsim[-1] = fxr

        elif fxr < fsim[-1]:
            # Outside contraction
            xc = (1 + PSI * RHO) * xbar - PSI * RHO * sim[-1]
            fxc = func(xc)
            if fxc <= fxr:
                sim[-1] = xc
                fsim[-1] = fxc
            else:
                doshrink = True

        else:
            # Inside contraction
            xcc = (1 - PSI) * xbar + PSI * sim[-1]
            fxcc = func(xcc)
            if fxcc < fsim[-1]:
                sim[-1] = xcc
                fsim[-1] = fxcc
            else:
                doshrink = True

        if doshrink:
            for j in range(1, N + 1):
                sim[j] = sim[0] + SIGMA * (sim[j] - sim[0])
                fsim[j] = func(sim[j])

        ind = np.argsort(fsim, kind='stable')
        sim = sim[ind]
        fsim = fsim[ind]

        if iterations % 100 == 0:
            logger.debug('simplex iteration %d: best %.12g, diameter %.3g',
                         iterations, fsim[0], diameter)

    return FitResult(params=sim[0], residual=fsim[0], iterations=iterations,
                     converged=converged, method='simplex', message=message)
