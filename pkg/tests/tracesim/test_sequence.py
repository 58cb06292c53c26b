import pytest
import numpy as np
from transmonfield.coherence import CoherenceSample, EnvelopeModel, pure_dephasing
from transmonfield.errors import SequenceStageError, ValidationError
from transmonfield.field import FieldModel, FieldSweep, JunctionFieldParams
from transmonfield.tracesim import SequenceTruth, TraceConfig, run_sequence, run_sweep

@pytest.fixture
def truth():
    field_model = FieldModel(JunctionFieldParams(16.15, 1.8, 300.0),
                             JunctionFieldParams(300.0, -0.2, 25.5), 0.19)
    return SequenceTruth(field_model, envelope=EnvelopeModel(53.4, 0.785, 2.25))

def test_truth_rates(truth):
    assert np.isclose(truth.gamma1(2.25), 0.0534)
    assert np.isclose(truth.gamma2(2.25), 0.0534 / 2 + 0.0939)

    extra = SequenceTruth(truth.field_model,
                          extra_gamma1=lambda b, direction: 10.0 if direction == 'down' else 0.0)
    assert np.isclose(extra.gamma1(2.25, 'down') - extra.gamma1(2.25, 'up'), 0.01)

    with pytest.raises(ValidationError):
        SequenceTruth(truth.field_model, gamma_phi=-0.1)
    with pytest.raises(ValidationError):
        SequenceTruth(truth.field_model, resonator_q=0.0)
    with pytest.raises(TypeError):
        SequenceTruth('not a model')

def test_noise_free_sequence(truth):
    config = TraceConfig(seed=0, noise_sigma=0.0, n_points=101)
    sample, fits = run_sequence(5.0, truth, config, return_fits=True)

    assert isinstance(sample, CoherenceSample)
    assert sorted(fits) == ['rabi', 'ramsey', 'resonator', 'spectroscopy', 't1']
    assert np.isclose(sample.gamma1, truth.gamma1(5.0), rtol=1e-5)
    assert np.isclose(sample.gamma2_ramsey, truth.gamma2(5.0), rtol=1e-5)
    assert np.isclose(fits['spectroscopy']['f_r'], truth.field_model.nu01(5.0), rtol=1e-8)
    assert np.isclose(fits['resonator']['f_r'], 7.0, rtol=1e-8)
    assert np.isclose(fits['rabi']['t_pi'], 0.1, rtol=1e-5)
    assert np.isclose(sample.gamma_phi, 0.0939, rtol=1e-4)

def test_noisy_sequence_is_reproducible(truth):
    config = TraceConfig(seed=4, noise_sigma=0.02, n_points=101)
    first = run_sequence(-3.0, truth, config, direction='down')
    second = run_sequence(-3.0, truth, config, direction='down')
    assert first.direction == 'down'
    assert first.gamma1 == second.gamma1
    assert first.gamma2_ramsey == second.gamma2_ramsey
    assert first.gamma_phi == second.gamma_phi

def test_noisy_sequence_accuracy(truth):
    b = truth.envelope.b_offs
    gamma1 = truth.gamma1(b)
    gamma2 = truth.gamma2(b)
    for seed in range(20):
        config = TraceConfig(seed=seed, noise_sigma=0.02, n_points=101)
        sample = run_sequence(b, truth, config)
        assert abs(sample.gamma1 - gamma1) <= 0.05 * gamma1, seed
        assert abs(sample.gamma2_ramsey - gamma2) <= 0.05 * gamma2, seed

        # 5% on both rates propagated through Γ₂ - Γ₁/2
        gamma_phi = pure_dephasing(sample.gamma1, sample.gamma2_ramsey)
        assert abs(gamma_phi - truth.gamma_phi) <= 0.05 * gamma2 + 0.025 * gamma1, seed
        assert gamma_phi == sample.gamma_phi

def test_stage_error(truth):
    config = TraceConfig(seed=0, noise_sigma=0.0, n_points=101)
    node = truth.field_model.jj2.b_delta + truth.field_model.jj2.b_phi0
    with pytest.raises(SequenceStageError) as err:
        run_sequence(node, truth, config)
    assert err.value.stage == 'spectroscopy'

def test_run_sweep(truth):
    sweep = FieldSweep.from_range(-2.0, 2.0, 2.0, direction='down')
    config = TraceConfig(seed=1, noise_sigma=0.01, n_points=101)
    table = run_sweep(sweep, truth, config)

    assert list(table.columns) == ['b_mT', 'nu01_GHz', 'gamma1_per_us', 'gamma2_per_us',
                                   'direction']
    assert np.allclose(table['b_mT'], [2.0, 0.0, -2.0])
    assert set(table['direction']) == {'down'}
    assert np.allclose(table['nu01_GHz'], truth.field_model.nu01(table['b_mT'].to_numpy()),
                       rtol=1e-4)

    # Each point draws its own seed
    again = run_sweep(sweep, truth, config)
    assert table.equals(again)
    single = run_sequence(0.0, truth, config.copy(seed=2), direction='down')
    assert single.gamma1 == table['gamma1_per_us'][1]
