import pytest
import numpy as np
from transmonfield.errors import ValidationError
from transmonfield.tools import convert_quantity, parse_quantity, UNIT_TABLE

def test_convert_quantity():
    assert np.isclose(convert_quantity(190, 'MHz', 'GHz'), 0.19)
    assert np.isclose(convert_quantity(0.0255, 'T', 'mT'), 25.5)
    assert np.isclose(convert_quantity(93.9, 'kHz', 'per_us'), 0.0939)
    assert np.isclose(convert_quantity(0.0939, 'per_us', 'kHz'), 93.9)
    assert convert_quantity(2.0, 'GHz', 'GHz') == 2.0

    with pytest.raises(ValidationError, match='not convertible'):
        convert_quantity(1.0, 'mT', 'GHz')
    with pytest.raises(ValidationError):
        convert_quantity(1.0, 'GHz', 'furlong')

def test_table_contains_canonical():
    for canonical, accepted in UNIT_TABLE.items():
        assert accepted[canonical] == 1.0

def test_parse_quantity():
    assert parse_quantity(0.19, 'GHz') == 0.19
    assert parse_quantity('0.19', 'GHz') == 0.19
    assert np.isclose(parse_quantity({'value': 190, 'unit': 'MHz'}, 'GHz'), 0.19)
    assert parse_quantity({'value': 1.5}, 'mT') == 1.5

    with pytest.raises(ValidationError, match='e-c'):
        parse_quantity('large', 'GHz', name='e-c')
    with pytest.raises(ValidationError):
        parse_quantity({'unit': 'MHz'}, 'GHz')
    with pytest.raises(ValidationError):
        parse_quantity({'value': 1, 'units': 'MHz'}, 'GHz')
