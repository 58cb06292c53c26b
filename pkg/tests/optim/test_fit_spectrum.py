import pytest
import numpy as np
import pandas as pd
from transmonfield.circuit import approx_transitions
from transmonfield.errors import (DegenerateDataError, RegimeWarning,
                                  UnderdeterminedError, ValidationError)
from transmonfield.field import FieldModel, JunctionFieldParams
from transmonfield.optim import (OptimizerConfig, SPECTRUM_PARAMETERS, fit_spectrum,
                                 spectrum_field_model)

E_C = 0.19
JJ1 = JunctionFieldParams(16.15, 1.8, 300.0)
JJ2 = JunctionFieldParams(300.0, -0.2, 25.5)
TRUTH = {'ej0_1': 16.15, 'ej0_2': 300.0, 'b_delta_1': 1.8, 'b_delta_2': -0.2,
         'b_phi0_1': 300.0, 'b_phi0_2': 25.5, 'e_c': E_C}

def measured(step, sigma=0.0, seed=0):
    b = np.arange(-30.0, 30.0 + step / 2, step)
    nu01 = approx_transitions(E_C, JJ1.ej(b), JJ2.ej(b))[0]
    if sigma > 0:
        nu01 = nu01 + np.random.default_rng(seed).normal(0.0, sigma, size=b.size)
    return pd.DataFrame({'b_mT': b, 'nu01_GHz': nu01})

def perturbed():
    jj1 = JunctionFieldParams(16.15 * 1.02, 1.9, 300.0 * 0.98)
    jj2 = JunctionFieldParams(300.0 * 1.02, -0.18, 25.5 * 1.002)
    return jj1, jj2

def test_noise_free_recovery():
    jj1, jj2 = perturbed()
    data = measured(0.05)
    config = OptimizerConfig(objective_tol=1e-20, n_starts=1, seed=0)
    with pytest.warns(RegimeWarning):
        result = fit_spectrum(data, jj1, jj2, E_C, config=config)

    assert result.names == list(SPECTRUM_PARAMETERS)
    fitted = result.as_dict()
    for name, expected in TRUTH.items():
        assert np.isclose(fitted[name], expected, rtol=1e-5, atol=0.0), name

    # e_c is frozen by default
    assert fitted['e_c'] == E_C
    assert result.n_points < len(data)

def test_noisy_recovery():
    data = measured(0.002, sigma=0.002, seed=1)
    config = OptimizerConfig(n_starts=1, seed=0)
    with pytest.warns(RegimeWarning):
        result = fit_spectrum(data, JJ1, JJ2, E_C, config=config)

    fitted = result.as_dict()
    for name in SPECTRUM_PARAMETERS[:6]:
        expected = TRUTH[name]
        assert abs(fitted[name] - expected) <= 0.02 * abs(expected), name
    assert result.covariance_estimate.shape == (7, 7)
    assert result.covariance_estimate[6, 6] == 0.0

def test_objective_not_above_initial():
    jj1, jj2 = perturbed()
    data = measured(0.1, sigma=0.002, seed=2)
    with pytest.warns(RegimeWarning):
        result = fit_spectrum(data, jj1, jj2, E_C, config=OptimizerConfig(n_starts=3, seed=5))

    # Same points the fit used
    b = data['b_mT'].to_numpy()
    nu = data['nu01_GHz'].to_numpy()
    ej_eff = approx_transitions(E_C, jj1.ej(b), jj2.ej(b))[2]
    used = (nu > 0) & (ej_eff / E_C >= 20.0)
    initial = np.sum((approx_transitions(E_C, jj1.ej(b[used]), jj2.ej(b[used]))[0]
                      - nu[used])**2)
    assert result.residual <= initial

def test_frozen():
    data = measured(0.1)
    jj1, jj2 = perturbed()
    frozen = ['e_c', 'b_phi0_1', 'b_delta_1']
    with pytest.warns(RegimeWarning):
        result = fit_spectrum(data, jj1, jj2, E_C, frozen=frozen,
                              config=OptimizerConfig(n_starts=1))
    fitted = result.as_dict()
    assert fitted['b_phi0_1'] == jj1.b_phi0
    assert fitted['b_delta_1'] == jj1.b_delta

    with pytest.raises(ValidationError):
        fit_spectrum(data, JJ1, JJ2, E_C, frozen=list(SPECTRUM_PARAMETERS))
    with pytest.raises(ValidationError):
        fit_spectrum(data, JJ1, JJ2, E_C, frozen=['ej0_3'])

def test_underdetermined():
    data = measured(0.1).iloc[[0, 300, 600]]
    with pytest.raises(UnderdeterminedError):
        fit_spectrum(data, JJ1, JJ2, E_C, frozen=[])

def test_degenerate():
    data = measured(0.5)
    with pytest.raises(DegenerateDataError):
        fit_spectrum(data, JJ1, JunctionFieldParams(300.0, -0.2), E_C)

def test_data_formats():
    pairs = measured(1.0)[['b_mT', 'nu01_GHz']].to_numpy()
    with pytest.raises(ValidationError):
        fit_spectrum(pairs[:, :1], JJ1, JJ2, E_C)
    with pytest.raises(ValidationError):
        fit_spectrum(pd.DataFrame({'b': pairs[:, 0], 'nu': pairs[:, 1]}), JJ1, JJ2, E_C)

def test_spectrum_field_model():
    data = measured(0.5)
    with pytest.warns(RegimeWarning):
        result = fit_spectrum(data, JJ1, JJ2, E_C, config=OptimizerConfig(n_starts=1))
    model = spectrum_field_model(result)
    assert isinstance(model, FieldModel)
    assert np.isclose(model.jj2.b_phi0, 25.5, rtol=1e-6)
    assert np.isclose(model.nu01(10.0),
                      approx_transitions(E_C, JJ1.ej(10.0), JJ2.ej(10.0))[0], rtol=1e-6)
