import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st

from transmonfield.errors import ValidationError, UnphysicalDephasingWarning
from transmonfield.coherence import (CoherenceSample, pure_dephasing,
                                     flux_noise_dephasing)

def test_pure_dephasing_examples():
    assert pure_dephasing(1.0, 0.5) == 0.0
    assert np.isclose(pure_dephasing(1.0, 0.5939), 0.0939)
    with pytest.warns(UnphysicalDephasingWarning):
        assert pure_dephasing(1.0, 0.4) < 0

@given(st.floats(min_value=0, max_value=1e3), st.floats(min_value=0, max_value=1e3))
def test_pure_dephasing_linear_identity(gamma1, x):
    gamma2 = gamma1 / 2 + x
    with warnings.catch_warnings():
        warnings.simplefilter('error', UnphysicalDephasingWarning)
        assert np.isclose(pure_dephasing(gamma1, gamma2), x, rtol=1e-12, atol=1e-12)

def test_pure_dephasing_invalid():
    with pytest.raises(ValidationError):
        pure_dephasing(-1.0, 0.5)
    with pytest.raises(ValidationError):
        pure_dephasing(1.0, np.inf)

def test_flux_noise_dephasing():
    slope = 2 * np.pi * 652e6
    rate_khz = flux_noise_dephasing(slope, 1e-15) * 1e-3
    assert abs(rate_khz - 53.0) <= 0.02 * 53.0
    assert flux_noise_dephasing(slope, 0.0) == 0.0
    assert np.isclose(flux_noise_dephasing(2 * slope, 1e-15),
                      4 * flux_noise_dephasing(slope, 1e-15))
    assert flux_noise_dephasing(-slope, 1e-15) == flux_noise_dephasing(slope, 1e-15)
    with pytest.raises(ValidationError):
        flux_noise_dephasing(slope, -1e-15)

def test_coherence_sample():
    sample = CoherenceSample(21.0, gamma1=1.0, gamma2_ramsey=0.5939)
    assert np.isclose(sample.gamma_phi, 0.0939)
    assert sample.physical
    assert sample.direction == 'up'
    assert CoherenceSample(0.0, gamma1=np.nan).gamma1 is None
    assert CoherenceSample(0.0, gamma1=1.0).gamma_phi is None

    bad = CoherenceSample(0.0, gamma1=1.0, gamma2_ramsey=0.4)
    assert not bad.physical
    with pytest.warns(UnphysicalDephasingWarning):
        bad.check()

    meta = sample.metadata()
    assert meta['b_mT'] == 21.0
    assert np.isnan(meta['gamma2_echo_per_us'])

    with pytest.raises(ValidationError):
        CoherenceSample(0.0, gamma1=-1.0)
    with pytest.raises(ValidationError):
        CoherenceSample(0.0, direction='left')
