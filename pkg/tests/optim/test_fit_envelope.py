import pytest
import numpy as np
from transmonfield.coherence import CoherenceSample, EnvelopeModel
from transmonfield.errors import DegenerateDataError, UnderdeterminedError
from transmonfield.optim import fit_envelope

def samples_of(b, gamma1_khz):
    return [CoherenceSample(bi, gamma1=gi * 1e-3) for bi, gi in zip(b, gamma1_khz)]

def test_exact_parabola():
    truth = EnvelopeModel(gamma_const=53.4, c=0.785, b_offs=2.25)
    b = np.linspace(-20.0, 20.0, 41)
    envelope = fit_envelope(samples_of(b, truth.rate(b)))

    assert np.isclose(envelope.gamma_const, 53.4, atol=1e-6)
    assert np.isclose(envelope.c, 0.785, atol=1e-6)
    assert np.isclose(envelope.b_offs, 2.25, atol=1e-6)

def test_synthetic_lower_envelope():
    truth = EnvelopeModel(gamma_const=53.4, c=0.785, b_offs=2.25)
    rng = np.random.default_rng(3)
    b = np.linspace(-40.0, 40.0, 201)
    gamma1 = truth.rate(b) + rng.exponential(2.0, size=b.size)
    envelope = fit_envelope(samples_of(b, gamma1))

    assert abs(envelope.gamma_const - 53.4) <= 0.05 * 53.4
    assert abs(envelope.c - 0.785) <= 0.05 * 0.785
    assert abs(envelope.b_offs - 2.25) <= 0.05 * 2.25
    assert np.mean(gamma1 >= envelope.rate(b)) >= 0.99

@pytest.mark.parametrize('n_points', [161, 201])
def test_coverage_on_input_rates(n_points):
    truth = EnvelopeModel(gamma_const=53.4, c=0.785, b_offs=2.25)
    b = np.linspace(-40.0, 40.0, n_points)
    for seed in range(50):
        rng = np.random.default_rng(seed)
        gamma1 = truth.rate(b) + rng.exponential(2.0, size=b.size)
        envelope = fit_envelope(samples_of(b, gamma1))
        assert np.mean(gamma1 >= envelope.rate(b)) >= 0.99, seed

def test_skips_missing_gamma1():
    truth = EnvelopeModel(gamma_const=10.0, c=0.1, b_offs=0.0)
    b = np.linspace(-10.0, 10.0, 21)
    samples = samples_of(b, truth.rate(b)) + [CoherenceSample(3.0, gamma2_ramsey=0.2)]
    envelope = fit_envelope(samples)
    assert np.isclose(envelope.gamma_const, 10.0, atol=1e-6)

def test_invalid():
    with pytest.raises(UnderdeterminedError):
        fit_envelope(samples_of([0.0, 1.0, 2.0], [1.0, 2.0, 3.0]))

    # All at one field
    with pytest.raises(DegenerateDataError):
        fit_envelope(samples_of(np.full(10, 5.0), np.linspace(50.0, 60.0, 10)))

    # Lowest rate at the edge of the sweep
    b = np.linspace(0.0, 10.0, 11)
    with pytest.raises(DegenerateDataError):
        fit_envelope(samples_of(b, 50.0 + b**2))

