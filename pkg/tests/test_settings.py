from pathlib import Path
import pytest
from transmonfield import settings
from transmonfield.Settings import Settings

@pytest.fixture
def unsaved(monkeypatch):
    monkeypatch.setattr(Settings, 'save', lambda self: None)
    return settings

def test_regime_threshold(unsaved):
    original = unsaved.regime_threshold
    try:
        unsaved.set_regime_threshold('25')
        assert unsaved.regime_threshold == 25.0
        unsaved.set_regime_threshold(20.0)
        assert unsaved.regime_threshold == 20.0
    finally:
        unsaved.set_regime_threshold(original)

    with pytest.raises(ValueError):
        unsaved.set_regime_threshold('high')
    with pytest.raises(ValueError):
        unsaved.set_regime_threshold(0.0)

def test_output_directory(unsaved):
    original = unsaved.output_directory
    try:
        unsaved.set_output_directory('results/run1')
        assert unsaved.output_directory == Path('results/run1')
    finally:
        unsaved.set_output_directory(original)
    assert isinstance(unsaved.output_directory, Path)

def test_default_seed(unsaved):
    original = unsaved.default_seed
    try:
        unsaved.set_default_seed('12')
        assert unsaved.default_seed == 12
    finally:
        unsaved.set_default_seed(original)

    with pytest.raises(ValueError):
        unsaved.set_default_seed(-3)
    with pytest.raises(ValueError):
        unsaved.set_default_seed('many')
