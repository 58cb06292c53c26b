# coding: utf-8
# Standard Python libraries
from typing import Any

# Local imports
from ..errors import ValidationError

__all__ = ['UNIT_TABLE', 'convert_quantity', 'parse_quantity']

# canonical unit -> {accepted unit: factor converting it to the canonical unit}
UNIT_TABLE = {
    'GHz': {'GHz': 1.0, 'MHz': 1e-3, 'kHz': 1e-6, 'Hz': 1e-9},
    'mT': {'mT': 1.0, 'T': 1e3, 'uT': 1e-3, 'µT': 1e-3, 'G': 0.1},
    'nm': {'nm': 1.0, 'um': 1e3, 'µm': 1e3, 'm': 1e9},
    'us': {'us': 1.0, 'µs': 1.0, 'ns': 1e-3, 'ms': 1e3, 's': 1e6},
    'MHz': {'MHz': 1.0, 'kHz': 1e-3, 'GHz': 1e3, 'Hz': 1e-6},
    'kHz': {'kHz': 1.0, 'MHz': 1e3, 'Hz': 1e-3, 'per_us': 1e3, 'per_ms': 1.0,
            'per_s': 1e-3},
    'per_us': {'per_us': 1.0, 'MHz': 1.0, 'kHz': 1e-3, 'per_ms': 1e-3,
               'per_s': 1e-6, 'Hz': 1e-6},
    'kHz/mT^2': {'kHz/mT^2': 1.0, 'Hz/mT^2': 1e-3, 'MHz/mT^2': 1e3},
    'A^2/Hz': {'A^2/Hz': 1.0, 'nA^2/Hz': 1e-18, 'uA^2/Hz': 1e-12},
    'mT/A': {'mT/A': 1.0, 'T/A': 1e3, 'mT/mA': 1e3, 'G/A': 0.1},
    'MHz/A': {'MHz/A': 1.0, 'GHz/A': 1e3, 'kHz/A': 1e-3, 'Hz/A': 1e-6},
    'ueV': {'ueV': 1.0, 'µeV': 1.0, 'meV': 1e3},
    'mK': {'mK': 1.0, 'K': 1e3},
    'deg': {'deg': 1.0},
    '': {'': 1.0},
}

def convert_quantity(value: float,
                     unit: str,
                     canonical: str) -> float:
    """
    Converts a value given in unit to the canonical unit.

    Parameters
    ----------
    value : float
        The numeric value.
    unit : str
        The unit value is expressed in.
    canonical : str
        The canonical unit, a key of UNIT_TABLE.

    Returns
    -------
    float
        The value in the canonical unit.

    Raises
    ------
    ValidationError
        If canonical is not in the table or unit is not accepted for it.
    """
    try:
        accepted = UNIT_TABLE[canonical]
    except KeyError as err:
        raise ValidationError(f'no unit table entry for {canonical!r}') from err
    try:
        factor = accepted[unit]
    except KeyError as err:
        raise ValidationError(f'unit {unit!r} not convertible to {canonical!r}: '
                              f'allowed units are {sorted(accepted)}') from err
    return float(value) * factor

def parse_quantity(entry: Any,
                   canonical: str,
                   name: str = 'value') -> float:
    """
    Interprets a configuration entry as a quantity in the canonical unit.

    Parameters
    ----------
    entry : float, str or dict-like
        Either a bare number taken to be in the canonical unit or a mapping
        with 'value' and optional 'unit' keys.
    canonical : str
        The canonical unit for the entry.
    name : str, optional
        Name of the entry used in error messages.

    Returns
    -------
    float
        The value converted to the canonical unit.
    """
    if hasattr(entry, 'keys'):
        if 'value' not in entry:
            raise ValidationError(f'{name}: quantity mapping needs a "value" key')
        unknown = set(entry.keys()) - {'value', 'unit'}
        if len(unknown) > 0:
            raise ValidationError(f'{name}: unknown quantity keys {sorted(unknown)}')
        value = entry['value']
        unit = entry.get('unit', canonical)
    else:
        value = entry
        unit = canonical

    try:
        value = float(value)
    except (TypeError, ValueError) as err:
        raise ValidationError(f'{name}: {value!r} is not numeric') from err

    return convert_quantity(value, str(unit), canonical)
