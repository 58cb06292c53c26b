# coding: utf-8
# Standard Python libraries
import logging
from typing import Callable, List, Tuple

# https://numpy.org/
import numpy as np

# https://pandas.pydata.org/
import pandas as pd

# Local imports
from ..circuit import anharmonicity_coefficient
from ..field import (FieldSweep, JunctionFieldParams, JunctionGeometry,
                     junction_length_from_period)
from ..coherence import (CoherenceSample, EnvelopeModel, NoiseSpec,
                         calibrate_coil_constant, flux_noise_dephasing,
                         frequency_slope_vs_current)
from ..optim import fit_envelope
from .RunConfig import RunConfig

__all__ = ['check_paper']

logger = logging.getLogger(__name__)

def _lengths() -> List[Tuple[str, float, float, float]]:
    geometry = JunctionGeometry(barrier_thickness=1.0, london_depth=16.0)
    return [('junction length jj1 (nm)',
             junction_length_from_period(300.0, geometry), 209.0, 1.0),
            ('junction length jj2 (nm)',
             junction_length_from_period(25.5, geometry), 2460.0, 5.0)]

def _dephasing() -> List[Tuple[str, float, float, float]]:
    gamma_phi = flux_noise_dephasing(2 * np.pi * 652e6, 1e-15) * 1e-3
    rows = [('flux-noise dephasing at 652 MHz/A (kHz)', gamma_phi, 53.0, 0.02 * 53.0)]

    field_model = RunConfig.default().field_model()
    coil = calibrate_coil_constant(field_model, b=21.0, target_mhz_per_a=652.0)
    slope = frequency_slope_vs_current(field_model, 21.0, NoiseSpec(coil, s_i=1e-15))
    rows.append(('model slope at 21 mT (MHz/A)', slope / (2 * np.pi) * 1e-6,
                 652.0, 0.02 * 652.0))
    rows.append(('model flux-noise dephasing at 21 mT (kHz)',
                 flux_noise_dephasing(slope, 1e-15) * 1e-3, 53.0, 0.02 * 53.0))
    return rows

def _anharmonicity() -> List[Tuple[str, float, float, float]]:
    asymmetry = max(abs(anharmonicity_coefficient(r) - anharmonicity_coefficient(1 / r))
                    for r in (2.0, 3.0, 10.0, 100.0))
    return [('anharmonicity reduction at r = 1', 1.0 / anharmonicity_coefficient(1.0),
             4.0, 0.0),
            ('anharmonicity coefficient asymmetry', asymmetry, 0.0, 1e-12)]

def _envelope() -> List[Tuple[str, float, float, float]]:
    truth = EnvelopeModel(gamma_const=53.4, c=0.785, b_offs=2.25)
    rng = np.random.default_rng(0)
    b = np.linspace(-40.0, 40.0, 161)
    gamma1_khz = truth.rate(b) + rng.exponential(2.0, size=b.size)
    samples = [CoherenceSample(bi, gamma1=gi * 1e-3) for bi, gi in zip(b, gamma1_khz)]
    fitted = fit_envelope(samples)

    rows = []
    for name in ('gamma_const', 'c', 'b_offs'):
        expected = getattr(truth, name)
        rows.append((f'envelope {name}', getattr(fitted, name), expected,
                     0.05 * expected))
    coverage = np.mean(gamma1_khz >= fitted.rate(b))
    rows.append(('envelope coverage', coverage, 1.0, 0.01))
    return rows

def _minima() -> List[Tuple[str, float, float, float]]:
    field_model = RunConfig.default().field_model()
    b = FieldSweep.from_range(-30.0, 30.0, 0.05).values
    nu01 = field_model.nu01(b)
    interior = np.arange(1, len(b) - 1)
    minima = b[interior[(nu01[interior] < nu01[interior - 1])
                        & (nu01[interior] <= nu01[interior + 1])]]

    rows = []
    jj2 = field_model.jj2
    for n in (-1, 1):
        expected = jj2.b_delta + n * jj2.b_phi0
        found = minima[np.argmin(np.abs(minima - expected))] if len(minima) > 0 else np.nan
        rows.append((f'spectrum minimum n={n:+d} (mT)', found, expected, 0.05))

    # Central lobe of jj2 is a maximum
    central = np.abs(b - jj2.b_delta) <= 5.0
    rows.append(('spectrum central maximum (mT)', b[central][np.argmax(nu01[central])],
                 jj2.b_delta, 0.5))
    return rows

def _indistinguishable() -> List[Tuple[str, float, float, float]]:
    interference = RunConfig.default().field_model()
    ej1_zero = interference.jj1.ej(0.0)
    gap = interference.copy(model='gap', gap_junction=1,
                            jj1=JunctionFieldParams(ej1_zero))

    b = FieldSweep.from_range(-40.0, 40.0, 0.05).values
    nu_i, _, valid_i = interference.transitions(b)
    nu_g, _, valid_g = gap.transitions(b)
    valid = valid_i & valid_g
    difference = np.max(np.abs(nu_i[valid] - nu_g[valid]) / nu_i[valid])
    return [('interference vs gap model difference', difference, 0.0, 0.02)]

_CHECKS: Tuple[Callable[[], List[Tuple[str, float, float, float]]], ...] = (
    _lengths, _dephasing, _anharmonicity, _envelope, _minima, _indistinguishable)

def check_paper() -> pd.DataFrame:
    """
    Runs the built-in reproductions of the measured device's published
    numbers: junction lengths, the 53 kHz flux-noise dephasing, the
    factor-4 anharmonicity reduction, the envelope constants, the
    positions of the spectrum minima and the agreement of the interference
    and gap models.

    Returns
    -------
    pandas.DataFrame
        One row per check with columns check, value, expected, tolerance
        and passed.  A tolerance of 0 requires exact equality.
    """
    rows = []
    for check in _CHECKS:
        rows.extend(check())

    table = pd.DataFrame(rows, columns=['check', 'value', 'expected', 'tolerance'])
    table['passed'] = np.abs(table['value'] - table['expected']) <= table['tolerance']
    for row in table.itertuples():
        logger.info('%s: %.6g (expected %.6g) %s', row.check, row.value, row.expected,
                    'pass' if row.passed else 'FAIL')
    return table
