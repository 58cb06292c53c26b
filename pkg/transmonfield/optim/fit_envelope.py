# coding: utf-8
# Standard Python libraries
import logging
from typing import Iterable

# https://numpy.org/
import numpy as np

# Local imports
from ..errors import DegenerateDataError, FitError, UnderdeterminedError
from ..coherence import CoherenceSample, EnvelopeModel

__all__ = ['fit_envelope']

logger = logging.getLogger(__name__)

def fit_envelope(samples: Iterable[CoherenceSample],
                 w_below: float = 100.0,
                 coverage: float = 0.99,
                 max_iterations: int = 100) -> EnvelopeModel:
    """
    Fits the parabolic lower envelope Γ_const + C(B - B_offs)² to decay
    rates.  An asymmetric least-squares fit weights points under the
    parabola w_below times more than points above, iterated until the
    weights settle.  The constant term is then lowered so that
    at least the coverage fraction of points lies strictly above it.

    Parameters
    ----------
    samples : list of CoherenceSample
        Samples with gamma1.  Samples without gamma1 are skipped.
    w_below : float, optional
        Weight of points below the parabola relative to points above.
        Default value is 100.
    coverage : float, optional
        Minimum fraction of points above the envelope.  Default value
        is 0.99.
    max_iterations : int, optional
        Iteration budget for the reweighting.  Default value is 100.

    Returns
    -------
    EnvelopeModel
        The fitted envelope with rates in kHz.

    Raises
    ------
    UnderdeterminedError
        If fewer than 6 samples carry gamma1.
    DegenerateDataError
        If fewer than 3 distinct fields are present, or the samples do not
        lie on both sides of the field of the lowest rate.
    FitError
        If the fitted parabola opens downward.
    """
    samples = [s for s in samples if s.gamma1 is not None]
    if len(samples) < 6:
        raise UnderdeterminedError(f'envelope fit needs at least 6 samples with gamma1, '
                                   f'got {len(samples)}')
    b = np.array([s.b for s in samples])
    gamma = np.array([s.gamma1 for s in samples]) * 1e3

    if len(np.unique(b)) < 3:
        raise DegenerateDataError('envelope fit needs at least 3 distinct field values')
    b_guess = b[np.argmin(gamma)]
    if not (np.any(b < b_guess) and np.any(b > b_guess)):
        raise DegenerateDataError(f'samples do not span both sides of b={b_guess} mT '
                                  'where the lowest rate was measured')

    design = np.column_stack([np.ones_like(b), b, b**2])
    weights = np.ones_like(b)
    for iteration in range(max_iterations):
        root = np.sqrt(weights)
        coef = np.linalg.lstsq(design * root[:, None], gamma * root, rcond=None)[0]
        resid = gamma - design @ coef
        new_weights = np.where(resid < 0, w_below, 1.0)
        if np.array_equal(new_weights, weights):
            break
        weights = new_weights
    logger.debug('envelope reweighting stopped after %d iterations', iteration + 1)

    a0, a1, c = coef
    if c < 0:
        raise FitError(f'fitted envelope curvature is negative ({c:.4g} kHz/mT^2)')
    if c == 0:
        b_offs = b_guess
    else:
        b_offs = -a1 / (2 * c)
    gamma_const = a0 - c * b_offs**2

    # Coverage fraction strictly above the curve
    resid = gamma - (gamma_const + c * (b - b_offs)**2)
    k = int(np.floor((1.0 - coverage) * len(resid)))
    shift = min(np.sort(resid)[k], 0.0)
    gamma_const += shift - 1e-9 * np.max(np.abs(gamma))

    return EnvelopeModel(gamma_const=max(gamma_const, 0.0), c=c, b_offs=b_offs)
