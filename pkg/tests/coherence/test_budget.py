import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import minimize_scalar

import matplotlib
matplotlib.use('Agg')

from transmonfield.errors import ValidationError, BelowEnvelopeWarning
from transmonfield.coherence import (CoherenceSample, EnvelopeModel, envelope_rate,
                                     loss_budget, loss_budget_table)

def test_envelope_rate_examples():
    model = EnvelopeModel()
    assert envelope_rate(model, 2.25) == 53.4
    assert np.isclose(envelope_rate(model, 12.25), 131.9)
    assert np.isclose(model.nonhysteretic(12.25), 78.5)

@given(st.floats(min_value=-100, max_value=100))
def test_envelope_symmetric(x):
    model = EnvelopeModel()
    assert np.isclose(model.rate(2.25 + x), model.rate(2.25 - x), rtol=1e-12)

def test_envelope_minimum_at_b_offs():
    model = EnvelopeModel()
    result = minimize_scalar(model.rate, bracket=(-20.0, 0.0, 20.0), method='golden')
    assert np.isclose(result.x, model.b_offs, atol=1e-4)

def test_envelope_model_validation():
    with pytest.raises(ValidationError):
        EnvelopeModel(gamma_const=-1.0)
    with pytest.raises(ValidationError):
        EnvelopeModel(c=np.nan)

def test_envelope_build_model():
    model = EnvelopeModel().build_model()
    assert model['envelope-model']['gamma-const']['value'] == 53.4
    assert model['envelope-model']['curvature']['unit'] == 'kHz/mT^2'

def test_envelope_plot():
    import matplotlib.pyplot as plt
    b = np.linspace(-20, 20, 41)
    fig = EnvelopeModel().plot(b, gamma1_khz=EnvelopeModel().rate(b) + 5.0)
    assert fig is not None
    plt.close(fig)

def test_loss_budget_examples():
    model = EnvelopeModel()
    budget = loss_budget(CoherenceSample(12.25, gamma1=0.2), model)
    assert np.isclose(budget.gamma_hyst, 68.1)
    assert np.isclose(budget.gamma_nonhyst, 78.5)
    assert budget.gamma_const == 53.4
    assert np.isclose(budget.total, 200.0)

    with warnings.catch_warnings():
        warnings.simplefilter('ignore', BelowEnvelopeWarning)
        on = loss_budget(CoherenceSample(12.25, gamma1=model.rate(12.25) * 1e-3), model)
    assert np.isclose(on.gamma_hyst, 0.0, atol=1e-9)

    with pytest.warns(BelowEnvelopeWarning):
        below = loss_budget(CoherenceSample(12.25, gamma1=(model.rate(12.25) - 1) * 1e-3),
                            model)
    assert below.gamma_hyst == 0.0

    with pytest.raises(ValidationError):
        loss_budget(CoherenceSample(0.0), model)

@given(st.floats(min_value=-50, max_value=50), st.floats(min_value=0, max_value=2.0))
def test_loss_budget_sum(b, gamma1):
    model = EnvelopeModel()
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', BelowEnvelopeWarning)
        budget = loss_budget(CoherenceSample(b, gamma1=gamma1), model)
    expected = max(gamma1 * 1e3, model.rate(b))
    assert abs(budget.total - expected) <= 1e-9 * max(1.0, expected)

def test_loss_budget_table():
    model = EnvelopeModel()
    samples = [CoherenceSample(0.0, gamma1=0.2),
               CoherenceSample(5.0, gamma1=0.01, direction='down'),
               CoherenceSample(10.0, gamma1=0.01),
               CoherenceSample(15.0)]
    with pytest.warns(BelowEnvelopeWarning) as record:
        table = loss_budget_table(samples, model)
    assert len([w for w in record if issubclass(w.category, BelowEnvelopeWarning)]) == 1
    assert len(table) == 3
    assert list(table.direction) == ['up', 'down', 'up']
    assert np.allclose(table.gamma_hyst_kHz.values[1:], 0.0)

class NoisyEnvelope(EnvelopeModel):
    def rate(self, b):
        warnings.warn('rate evaluated outside the fitted range', RuntimeWarning)
        return super().rate(b)

def test_loss_budget_table_keeps_other_warnings():
    samples = [CoherenceSample(0.0, gamma1=0.2), CoherenceSample(5.0, gamma1=0.01)]
    with pytest.warns(RuntimeWarning, match='outside the fitted range') as record:
        table = loss_budget_table(samples, NoisyEnvelope())
    assert len(table) == 2
    categories = [w.category for w in record]
    assert categories.count(RuntimeWarning) == 2
    assert categories.count(BelowEnvelopeWarning) == 1
