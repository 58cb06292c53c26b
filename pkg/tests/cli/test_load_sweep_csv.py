import pytest
import numpy as np
import pandas as pd
from transmonfield.cli import SweepTable, load_sweep_csv
from transmonfield.coherence import CoherenceSample
from transmonfield.errors import ValidationError

def write(tmp_path, text, name='sweep.csv'):
    path = tmp_path / name
    path.write_text(text, encoding='utf-8')
    return path

def test_three_rows(tmp_path):
    path = write(tmp_path, 'b_mT,nu01_GHz\n0,4.5\n1.5,4.49\n3,4.47\n')
    table = load_sweep_csv(path)
    assert len(table) == 3
    assert table.columns == ['b_mT', 'nu01_GHz', 'direction']
    assert np.allclose(table.data['b_mT'], [0.0, 1.5, 3.0])
    assert list(table.data['direction']) == ['up', 'up', 'up']

def test_missing_cells(tmp_path):
    path = write(tmp_path, 'b_mT,gamma1_per_us,gamma2_per_us,direction\n'
                           '-1,0.05,,down\n0,,0.12,\n')
    table = load_sweep_csv(path)
    data = table.data
    assert np.isnan(data['gamma2_per_us'][0])
    assert np.isnan(data['gamma1_per_us'][1])
    assert list(data['direction']) == ['down', 'up']

    samples = table.samples()
    assert samples[0].gamma2_ramsey is None
    assert samples[1].gamma1 is None
    assert samples[1].gamma2_ramsey == 0.12

def test_unknown_columns(tmp_path):
    path = write(tmp_path, 'field,freq\n0,4.5\n')
    with pytest.raises(ValidationError) as err:
        load_sweep_csv(path)
    assert 'field' in str(err.value)
    assert 'freq' in str(err.value)

def test_empty(tmp_path):
    with pytest.raises(ValidationError, match='empty input'):
        load_sweep_csv(write(tmp_path, ''))
    with pytest.raises(ValidationError, match='empty input'):
        load_sweep_csv(write(tmp_path, 'b_mT,nu01_GHz\n', name='header.csv'))

def test_missing_field(tmp_path):
    with pytest.raises(ValidationError, match='b_mT'):
        load_sweep_csv(write(tmp_path, 'nu01_GHz\n4.5\n'))

def test_bad_cells(tmp_path):
    path = write(tmp_path, 'b_mT,gamma1_per_us\n0,0.05\n1,fast\n')
    with pytest.raises(ValidationError) as err:
        load_sweep_csv(path)
    assert 'row 2' in str(err.value)
    assert 'gamma1_per_us' in str(err.value)

    with pytest.raises(ValidationError, match='row 1'):
        load_sweep_csv(write(tmp_path, 'b_mT,nu01_GHz\n,4.5\n', name='blank.csv'))

    with pytest.raises(ValidationError, match='direction'):
        load_sweep_csv(write(tmp_path, 'b_mT,direction\n0,sideways\n', name='dir.csv'))

def test_round_trip(tmp_path):
    rng = np.random.default_rng(8)
    gamma2 = rng.uniform(0.05, 0.2, 20)
    gamma2[5] = np.nan
    table = SweepTable(pd.DataFrame({'b_mT': rng.uniform(-40.0, 40.0, 20),
                                     'nu01_GHz': rng.uniform(3.0, 5.0, 20),
                                     'gamma1_per_us': rng.uniform(0.01, 0.1, 20),
                                     'gamma2_per_us': gamma2,
                                     'direction': ['up', 'down'] * 10}))
    path = tmp_path / 'round.csv'
    table.save_csv(path)
    loaded = load_sweep_csv(path)

    assert loaded.columns == table.columns
    for column in ['b_mT', 'nu01_GHz', 'gamma1_per_us', 'gamma2_per_us']:
        assert np.array_equal(loaded.data[column], table.data[column], equal_nan=True)
    assert list(loaded.data['direction']) == list(table.data['direction'])

def test_sweep_table():
    with pytest.raises(ValidationError):
        SweepTable(pd.DataFrame({'nu01_GHz': [1.0]}))
    with pytest.raises(ValidationError):
        SweepTable(pd.DataFrame({'b_mT': [np.inf]}))

    samples = [CoherenceSample(1.0, gamma1=0.05, direction='down'),
               CoherenceSample(2.0, gamma2_ramsey=0.1)]
    table = SweepTable.from_samples(samples)
    assert len(table) == 2
    table.require('gamma1_per_us', 'gamma2_per_us')
    with pytest.raises(ValidationError, match='nu01_GHz'):
        table.require('nu01_GHz')

    back = table.samples()
    assert back[0].direction == 'down'
    assert back[0].gamma2_ramsey is None
    assert back[1].gamma2_ramsey == 0.1
