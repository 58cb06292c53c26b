import json
import pytest
import numpy as np
import pandas as pd
import click
from transmonfield.cli import (RunConfig, SweepTable, check_paper, load_sweep_csv, main,
                               parse_b_range)
from transmonfield.coherence import EnvelopeModel

@pytest.fixture
def coherence_csv(tmp_path):
    rng = np.random.default_rng(2)
    b = np.linspace(-30.0, 30.0, 61)
    gamma1 = (EnvelopeModel().rate(b) + rng.exponential(3.0, size=b.size)) * 1e-3
    gamma2 = gamma1 / 2 + 0.0939 + rng.normal(0.0, 0.005, size=b.size)
    path = tmp_path / 'coherence.csv'
    SweepTable(pd.DataFrame({'b_mT': b, 'gamma1_per_us': gamma1,
                             'gamma2_per_us': gamma2})).save_csv(path)
    return path

def test_parse_b_range():
    sweep = parse_b_range('-1:1:0.5')
    assert np.allclose(sweep.values, [-1.0, -0.5, 0.0, 0.5, 1.0])
    assert parse_b_range('0:2:1', direction='down').values[0] == 2.0
    for text in ('1:2', 'a:b:c', '0:1:0'):
        with pytest.raises(click.BadParameter):
            parse_b_range(text)

def test_check_paper():
    table = check_paper()
    assert list(table.columns) == ['check', 'value', 'expected', 'tolerance', 'passed']
    failed = table[~table['passed']]
    assert len(failed) == 0, failed.to_string()

    assert main(['check-paper']) == 0

def test_usage_errors(tmp_path):
    assert main(['no-such-command']) == 1
    assert main(['fit-envelope', '--in', str(tmp_path / 'missing.csv')]) == 1
    assert main(['spectrum', '--b-range', '1:2', '--out', str(tmp_path)]) == 1

    # No input given anywhere
    assert main(['fit-envelope', '--out', str(tmp_path)]) == 1

def test_invalid_input(tmp_path):
    path = tmp_path / 'bad.csv'
    path.write_text('field,freq\n0,4.5\n', encoding='utf-8')
    assert main(['fit-envelope', '--in', str(path), '--out', str(tmp_path)]) == 2

    config = tmp_path / 'bad.json'
    config.write_text(json.dumps({'run-config': {'optim': {'seeds': 1}}}), encoding='utf-8')
    assert main(['spectrum', '--config', str(config), '--out', str(tmp_path)]) == 2

    # Rates without a spectrum column
    rates = tmp_path / 'rates.csv'
    rates.write_text('b_mT,gamma1_per_us\n0,0.05\n1,0.06\n', encoding='utf-8')
    assert main(['fit-spectrum', '--in', str(rates), '--out', str(tmp_path)]) == 2

def test_fit_failure(tmp_path):
    # Spectroscopy fails at the JJ2 node 25.3 mT
    assert main(['simulate-sequence', '--b-range', '25.3:26.3:1',
                 '--out', str(tmp_path)]) == 3

def test_spectrum(tmp_path):
    assert main(['spectrum', '--b-range', '-5:5:1', '--out', str(tmp_path)]) == 0
    table = pd.read_csv(tmp_path / 'spectrum.csv')
    assert list(table.columns) == ['b_mT', 'nu01_GHz', 'nu12_GHz', 'regime_valid']
    assert len(table) == 11
    assert (tmp_path / 'spectrum.tsv').is_file()
    assert (tmp_path / 'spectrum.svg').is_file()

    model = RunConfig.default().field_model()
    assert np.allclose(table['nu01_GHz'], model.nu01(table['b_mT'].to_numpy()))

def test_config_output_directory(tmp_path):
    config = tmp_path / 'run.json'
    config.write_text(json.dumps({'run-config': {'cli-io': {
        'output-directory': 'results', 'b-start': 0, 'b-stop': 2, 'b-step': 1}}}),
        encoding='utf-8')
    assert main(['spectrum', '--config', str(config)]) == 0
    assert len(pd.read_csv(tmp_path / 'results' / 'spectrum.csv')) == 3

def test_fit_spectrum_round_trip(tmp_path):
    model = RunConfig.default().field_model()
    b = np.arange(-30.0, 30.25, 0.5)
    path = tmp_path / 'spectrum_in.csv'
    SweepTable(pd.DataFrame({'b_mT': b, 'nu01_GHz': model.nu01(b)})).save_csv(path)

    assert main(['fit-spectrum', '--in', str(path), '--out', str(tmp_path)]) == 0
    report = json.loads((tmp_path / 'fit_spectrum.json').read_text(encoding='utf-8'))
    params = {p['name']: p['value'] for p in report['fit-result']['parameter']}
    assert np.isclose(params['b_phi0_2'], 25.5, rtol=1e-6)
    assert np.isclose(params['ej0_1'], 16.15, rtol=1e-6)
    assert (tmp_path / 'fit_spectrum.svg').is_file()

def test_coherence_commands(tmp_path, coherence_csv):
    out = str(tmp_path / 'out')
    assert main(['fit-envelope', '--in', str(coherence_csv), '--out', out]) == 0
    envelope = json.loads((tmp_path / 'out' / 'fit_envelope.json').read_text(encoding='utf-8'))
    assert len(envelope) == 1

    assert main(['coherence-budget', '--in', str(coherence_csv), '--out', out]) == 0
    budget = pd.read_csv(tmp_path / 'out' / 'coherence_budget.csv')
    assert len(budget) == 61

    assert main(['fit-dephasing', '--in', str(coherence_csv), '--out', out]) == 0
    line = json.loads((tmp_path / 'out' / 'fit_dephasing.json').read_text(encoding='utf-8'))
    assert abs(line['dephasing-line']['gamma_phi_kHz'] - 93.9) < 5.0

def test_dephasing(tmp_path):
    assert main(['dephasing', '--out', str(tmp_path)]) == 0
    report = json.loads((tmp_path / 'dephasing.json').read_text(encoding='utf-8'))
    estimate = report['dephasing-estimate']
    assert estimate['b_mT'] == 21.0
    assert abs(estimate['slope_MHz_per_A'] - 652.0) <= 0.02 * 652.0
    assert abs(estimate['gamma_phi_kHz'] - 53.0) <= 0.02 * 53.0

def test_simulate_sequence(tmp_path):
    assert main(['simulate-sequence', '--b-range', '-1:1:1', '--direction', 'down',
                 '--out', str(tmp_path)]) == 0
    table = load_sweep_csv(tmp_path / 'sequence.csv')
    assert len(table) == 3
    data = table.data
    assert list(data['direction']) == ['down'] * 3
    assert np.allclose(data['b_mT'], [1.0, 0.0, -1.0])
    assert np.allclose(data['gamma1_per_us'], EnvelopeModel().rate(data['b_mT'].to_numpy())
                       * 1e-3, rtol=1e-4)
