import numpy as np
import pytest
from hypothesis import given, strategies as st

from transmonfield.errors import ValidationError
from transmonfield.circuit import (current_phase, anharmonicity_coefficient,
                                   effective_josephson_energy,
                                   josephson_energy_from_current,
                                   critical_current_from_energy)

def test_current_phase_single_junction_limit():
    phi = np.linspace(-np.pi, np.pi, 41)
    current = current_phase(phi, 1.0, 1e9)
    assert np.allclose(current, np.sin(phi), atol=1e-8)

def test_current_phase_identical_junctions():
    phi = np.linspace(-1.5, 1.5, 31)
    assert np.allclose(current_phase(phi, 2.0, 2.0), 2.0 * np.sin(phi / 2))

def test_current_phase_bounded_by_smaller_current():
    phi = np.linspace(-2 * np.pi, 2 * np.pi, 401)
    current = current_phase(phi, 3.0, 7.0)
    assert np.max(np.abs(current)) <= 3.0 + 1e-12

def test_current_phase_zero_junction():
    assert current_phase(0.3, 0.0, 5.0) == 0.0

def test_current_phase_errors():
    with pytest.raises(ValidationError):
        current_phase(0.1, 0.0, 0.0)
    with pytest.raises(ValidationError):
        current_phase(0.1, -1.0, 2.0)
    with pytest.raises(ValidationError):
        current_phase(np.nan, 1.0, 2.0)

def test_anharmonicity_coefficient_values():
    assert anharmonicity_coefficient(1.0) == 0.25
    assert anharmonicity_coefficient(np.inf) == 1.0
    for r in (2.0, 3.0, 10.0, 100.0):
        assert abs(anharmonicity_coefficient(r) - anharmonicity_coefficient(1 / r)) <= 1e-12

    with pytest.raises(ValidationError):
        anharmonicity_coefficient(0.0)
    with pytest.raises(ValidationError):
        anharmonicity_coefficient(np.nan)

@given(st.floats(min_value=1e-6, max_value=1e6))
def test_anharmonicity_coefficient_range(r):
    coef = anharmonicity_coefficient(r)
    assert 0.25 <= coef <= 1.0
    assert coef == anharmonicity_coefficient(1.0 / r) or np.isclose(
        coef, anharmonicity_coefficient(1.0 / r), rtol=1e-12, atol=0)

def test_effective_josephson_energy():
    assert np.isclose(effective_josephson_energy(16.15, 300.0), 16.15 * 300 / 316.15)
    assert effective_josephson_energy(4.0, 4.0) == 2.0
    assert effective_josephson_energy(0.0, 4.0) == 0.0
    assert effective_josephson_energy(3.0, 5.0) == effective_josephson_energy(5.0, 3.0)

def test_josephson_energy_from_current():
    # 1 nA corresponds to about 0.497 GHz
    assert np.isclose(josephson_energy_from_current(1.0), 0.4967, rtol=1e-3)
    ic = np.array([10.0, 32.5])
    assert np.allclose(critical_current_from_energy(josephson_energy_from_current(ic)), ic)
