import numpy as np
import pandas as pd
import pytest

import matplotlib
matplotlib.use('Agg')

from transmonfield.errors import ValidationError
from transmonfield.field import (FieldModel, FieldSweep, GapModel, JunctionFieldParams,
                                 qubit_frequency_vs_field)

@pytest.fixture
def device():
    jj1 = JunctionFieldParams(16.15, b_delta=1.8, b_phi0=300.0)
    jj2 = JunctionFieldParams(300.0, b_delta=-0.2, b_phi0=25.5)
    return FieldModel(jj1, jj2, 0.19)

def test_sweep_from_range():
    sweep = FieldSweep.from_range(-1.0, 1.0, 0.5)
    assert np.allclose(sweep.values, [-1.0, -0.5, 0.0, 0.5, 1.0])
    down = FieldSweep.from_range(-1.0, 1.0, 0.5, direction='down')
    assert np.allclose(down.values, sweep.values[::-1])
    assert down.direction == 'down'
    assert len(FieldSweep.from_range(-30, 30, 0.1)) == 601

    with pytest.raises(ValidationError):
        FieldSweep.from_range(0.0, 1.0, 0.0)
    with pytest.raises(ValidationError):
        FieldSweep([0.0, np.inf])
    with pytest.raises(ValidationError):
        FieldSweep([0.0], direction='sideways')

def test_spectrum_minima(device):
    b = FieldSweep.from_range(-30.0, 30.0, 0.05).values
    nu01 = device.nu01(b)
    i = np.arange(1, len(b) - 1)
    minima = b[i[(nu01[i] < nu01[i - 1]) & (nu01[i] <= nu01[i + 1])]]
    for n in (-1, 1):
        expected = -0.2 + n * 25.5
        assert np.min(np.abs(minima - expected)) <= 0.05

def test_frequencies_table(device):
    sweep = FieldSweep.from_range(-5.0, 5.0, 1.0)
    table = device.frequencies(sweep)
    assert isinstance(table, pd.DataFrame)
    assert list(table.columns) == ['b_mT', 'nu01_GHz', 'nu12_GHz', 'regime_valid']
    assert len(table) == 11
    assert table.regime_valid.all()
    assert (table.nu12_GHz < table.nu01_GHz).all()

    down = device.frequencies(FieldSweep.from_range(-5.0, 5.0, 1.0, direction='down'))
    assert np.allclose(down.nu01_GHz.values[::-1], table.nu01_GHz.values)

    other = qubit_frequency_vs_field(device.jj1, device.jj2, 0.19, sweep)
    assert np.allclose(other.nu01_GHz, table.nu01_GHz)

def test_swapped_model(device):
    b = np.linspace(-30, 30, 61)
    assert np.allclose(device.swapped().nu01(b), device.nu01(b), rtol=1e-12)

def test_single_junction_limit():
    jj1 = JunctionFieldParams(16.15, b_delta=1.8, b_phi0=300.0)
    jj2 = JunctionFieldParams(1e9)
    model = FieldModel(jj1, jj2, 0.19)
    b = np.linspace(-100, 100, 21)
    expected = np.sqrt(8 * 0.19 * jj1.ej(b)) - 0.19
    assert np.allclose(model.nu01(b), expected, rtol=1e-6)

def test_ej0_scaling(device):
    b = np.linspace(-10.0, 10.0, 5)
    s = 4.0
    scaled = device.copy(jj1=JunctionFieldParams(16.15 * s, 1.8, 300.0),
                         jj2=JunctionFieldParams(300.0 * s, -0.2, 25.5))
    nu01, nu12, _ = device.transitions(b)
    nu01_s, nu12_s, _ = scaled.transitions(b)
    harmonic = 2 * nu01 - nu12
    harmonic_s = 2 * nu01_s - nu12_s
    assert np.allclose(harmonic_s / harmonic, np.sqrt(s), rtol=0.005)

def test_interference_and_gap_models_agree(device):
    gap_model = device.copy(model='gap', jj1=JunctionFieldParams(device.jj1.ej(0.0)))
    assert np.isclose(gap_model.nu01(0.0), device.nu01(0.0), rtol=1e-12)

    b = FieldSweep.from_range(-40.0, 40.0, 0.05).values
    nu_i, _, valid_i = device.transitions(b)
    nu_g, _, valid_g = gap_model.transitions(b)
    valid = valid_i & valid_g
    assert valid.sum() > len(b) // 2
    assert np.max(np.abs(nu_i[valid] - nu_g[valid]) / nu_i[valid]) < 0.02

def test_both_model(device):
    both = device.copy(model='both', gap=GapModel(b_c=168.0))
    ej1, ej2 = both.ej(84.0)
    assert np.isclose(ej1, device.jj1.ej(84.0) * np.sqrt(0.75))
    assert np.isclose(ej2, device.jj2.ej(84.0))

def test_exact_method_close_to_approx(device):
    exact = device.copy(method='exact')
    for b in (0.0, 10.0):
        assert abs(exact.nu01(b) - device.nu01(b)) / exact.nu01(b) < 0.01

def test_field_model_validation(device):
    with pytest.raises(ValidationError):
        device.copy(model='fraunhofer')
    with pytest.raises(ValidationError):
        device.copy(method='numeric')
    with pytest.raises(ValidationError):
        device.copy(gap_junction=3)
    with pytest.raises(ValidationError):
        device.copy(e_c=0.0)

def test_field_model_plot(device):
    import matplotlib.pyplot as plt
    fig = device.plot(FieldSweep.from_range(-30.0, 30.0, 0.5))
    assert fig is not None
    plt.close(fig)

    fig, ax = plt.subplots()
    assert device.plot(np.linspace(-30, 30, 61), n=1, matplotlib_axes=ax) is None
    plt.close(fig)

def test_field_model_metadata(device):
    meta = device.metadata()
    assert meta['e_c_GHz'] == 0.19
    assert meta['model'] == 'interference'
