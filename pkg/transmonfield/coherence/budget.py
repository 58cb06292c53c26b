# coding: utf-8
# Standard Python libraries
from typing import Iterable, Union
import warnings

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# https://pandas.pydata.org/
import pandas as pd

# Local imports
from ..errors import BelowEnvelopeWarning, ValidationError
from .CoherenceSample import CoherenceSample
from .EnvelopeModel import EnvelopeModel
from .LossBudget import LossBudget

__all__ = ['envelope_rate', 'loss_budget', 'loss_budget_table']

def envelope_rate(model: EnvelopeModel,
                  b: npt.ArrayLike) -> Union[float, np.ndarray]:
    """
    Γ_const + C(b - b_offs)² in kHz.
    """
    return model.rate(b)

def loss_budget(sample: CoherenceSample,
                model: EnvelopeModel) -> LossBudget:
    """
    Splits a sample's decay rate into constant, non-hysteretic and
    hysteretic parts using the parabolic envelope.

    Parameters
    ----------
    sample : CoherenceSample
        Must carry gamma1 (µs⁻¹).
    model : EnvelopeModel
        The lower envelope.

    Returns
    -------
    LossBudget
        Parts in kHz.  gamma_hyst is clipped at 0 with a
        BelowEnvelopeWarning when Γ₁ lies under the envelope, so the parts
        always sum to max(Γ₁, envelope).
    """
    if sample.gamma1 is None:
        raise ValidationError(f'sample at b={sample.b} mT has no gamma1')

    gamma1 = sample.gamma1 * 1e3
    envelope = model.rate(sample.b)
    gamma_hyst = gamma1 - envelope
    if gamma_hyst < 0:
        warnings.warn(f'gamma1 {gamma1:.6g} kHz at b={sample.b} mT lies {-gamma_hyst:.3g} kHz '
                      'below the envelope', BelowEnvelopeWarning)
        gamma_hyst = 0.0

    return LossBudget(gamma_hyst=gamma_hyst,
                      gamma_nonhyst=model.nonhysteretic(sample.b),
                      gamma_const=model.gamma_const,
                      b=sample.b,
                      direction=sample.direction)

def loss_budget_table(samples: Iterable[CoherenceSample],
                      model: EnvelopeModel) -> pd.DataFrame:
    """
    Builds the loss budget for each sample with gamma1.  Points below the
    envelope are summarized in one BelowEnvelopeWarning.

    Returns
    -------
    pandas.DataFrame
        Columns b_mT, direction, gamma1_kHz, gamma_hyst_kHz,
        gamma_nonhyst_kHz, gamma_const_kHz and gamma_total_kHz.
    """
    rows = []
    n_below = 0
    for sample in samples:
        if sample.gamma1 is None:
            continue
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always', BelowEnvelopeWarning)
            budget = loss_budget(sample, model)
        for w in caught:
            if issubclass(w.category, BelowEnvelopeWarning):
                n_below += 1
            else:
                warnings.warn_explicit(w.message, w.category, w.filename, w.lineno)
        row = budget.metadata()
        row['gamma1_kHz'] = sample.gamma1 * 1e3
        rows.append(row)

    if n_below > 0:
        warnings.warn(f'{n_below} of {len(rows)} samples lie below the envelope',
                      BelowEnvelopeWarning)

    columns = ['b_mT', 'direction', 'gamma1_kHz', 'gamma_hyst_kHz',
               'gamma_nonhyst_kHz', 'gamma_const_kHz', 'gamma_total_kHz']
    return pd.DataFrame(rows, columns=columns)
