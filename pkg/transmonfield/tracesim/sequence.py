# coding: utf-8
# Standard Python libraries
import logging
from typing import Callable, Dict, Optional, Tuple, Union

# https://numpy.org/
import numpy as np

# https://pandas.pydata.org/
import pandas as pd

# Local imports
from ..errors import FitError, SequenceStageError, ValidationError
from ..coherence import CoherenceSample, EnvelopeModel
from ..field import FieldModel, FieldSweep
from ..optim import OptimizerConfig
from .TraceConfig import TraceConfig
from .simulate import simulate_trace
from .fit import TraceFit, fit_trace

__all__ = ['SequenceTruth', 'run_sequence', 'run_sweep']

logger = logging.getLogger(__name__)

STAGES = ('resonator', 'spectroscopy', 'rabi', 't1', 'ramsey')

class SequenceTruth():
    """
    Ground truth the synthetic measurement sequence samples from.
    """
    def __init__(self,
                 field_model: FieldModel,
                 envelope: Optional[EnvelopeModel] = None,
                 gamma_phi: float = 0.0939,
                 extra_gamma1: Optional[Callable[[float, str], float]] = None,
                 resonator_frequency: float = 7.0,
                 resonator_q: float = 5100.0,
                 resonator_depth: float = 0.5,
                 qubit_linewidth: float = 2.0,
                 rabi_t_pi: float = 0.1,
                 rabi_decay: float = 1.0):
        """
        Class initializer.

        Parameters
        ----------
        field_model : FieldModel
            Gives the qubit frequency at each field.
        envelope : EnvelopeModel, optional
            Gives Γ₁ in kHz at each field.  Default EnvelopeModel() values are
            used if not given.
        gamma_phi : float, optional
            Pure dephasing Γφ in µs⁻¹.  Default value is 0.0939.
        extra_gamma1 : callable, optional
            Additional loss in kHz as a function of (b, direction), used to
            give up and down sweeps different decay rates.
        resonator_frequency : float, optional
            Readout resonator frequency in GHz.  Default value is 7.0.
        resonator_q : float, optional
            Loaded quality factor.  Default value is 5100.
        resonator_depth : float, optional
            Normalized depth of the resonator dip.  Default value is 0.5.
        qubit_linewidth : float, optional
            FWHM of the spectroscopy line in MHz.  Default value is 2.
        rabi_t_pi : float, optional
            π-pulse length in µs.  Default value is 0.1.
        rabi_decay : float, optional
            Decay time of the Rabi oscillation in µs.  Default value is 1.
        """
        if not isinstance(field_model, FieldModel):
            raise TypeError('field_model must be a FieldModel')
        if envelope is None:
            envelope = EnvelopeModel()
        gamma_phi = float(gamma_phi)
        if not 0 <= gamma_phi < np.inf:
            raise ValidationError(f'gamma_phi must be finite and non-negative, got {gamma_phi}')
        for name, value in (('resonator_frequency', resonator_frequency),
                            ('resonator_q', resonator_q), ('resonator_depth', resonator_depth),
                            ('qubit_linewidth', qubit_linewidth), ('rabi_t_pi', rabi_t_pi),
                            ('rabi_decay', rabi_decay)):
            if not 0 < value < np.inf:
                raise ValidationError(f'{name} must be positive and finite, got {value}')

        self.field_model = field_model
        self.envelope = envelope
        self.gamma_phi = gamma_phi
        self.extra_gamma1 = extra_gamma1
        self.resonator_frequency = float(resonator_frequency)
        self.resonator_q = float(resonator_q)
        self.resonator_depth = float(resonator_depth)
        self.qubit_linewidth = float(qubit_linewidth)
        self.rabi_t_pi = float(rabi_t_pi)
        self.rabi_decay = float(rabi_decay)

    def gamma1(self, b: float, direction: str = 'up') -> float:
        """
        True decay rate in µs⁻¹ at field b for a sweep direction.
        """
        rate = self.envelope.rate(b)
        if self.extra_gamma1 is not None:
            extra = float(self.extra_gamma1(b, direction))
            if extra < 0:
                raise ValidationError(f'extra_gamma1 must be non-negative, got {extra}')
            rate += extra
        return rate * 1e-3

    def gamma2(self, b: float, direction: str = 'up') -> float:
        """
        True Ramsey dephasing rate Γ₁/2 + Γφ in µs⁻¹.
        """
        return self.gamma1(b, direction) / 2 + self.gamma_phi

def _stage(name: str,
           index: int,
           kind: str,
           params: dict,
           config: TraceConfig,
           span: Tuple[float, float],
           optimizer: Optional[OptimizerConfig]) -> TraceFit:
    """Simulates and fits one stage, tagging any failure with the stage name"""
    stage_config = config.copy(seed=config.seed * len(STAGES) + index, span=span)
    try:
        trace = simulate_trace(kind, params, stage_config)
        fit = fit_trace(kind, trace, optimizer)
    except (FitError, ValueError) as err:
        raise SequenceStageError(name, str(err)) from err
    if not fit.converged:
        raise SequenceStageError(name, 'fit did not converge')
    logger.info('stage %s: %s', name, fit.params)
    return fit

def run_sequence(b: float,
                 truth: SequenceTruth,
                 config: TraceConfig,
                 direction: str = 'up',
                 optimizer: Optional[OptimizerConfig] = None,
                 return_fits: bool = False
                 ) -> Union[CoherenceSample, Tuple[CoherenceSample, Dict[str, TraceFit]]]:
    """
    Runs the synthetic measurement sequence at one field: resonator scan,
    qubit spectroscopy, Rabi, T1 and Ramsey, each simulated from the ground
    truth and fitted.

    Parameters
    ----------
    b : float
        Field in mT.
    truth : SequenceTruth
        Ground truth.
    config : TraceConfig
        Noise amplitude, number of points and seed.  The span is chosen per
        stage: ±5 linewidths for the frequency scans, 2 decay times for
        Rabi, and 5 T1 or 5 T2 for the decay traces.  Each stage draws noise
        from its own seed derived from config.seed.
    direction : str, optional
        Sweep direction tag passed to the ground truth.  Default value is 'up'.
    optimizer : OptimizerConfig, optional
        Settings for the trace fits.
    return_fits : bool, optional
        If True, the per-stage TraceFit objects are returned too.

    Returns
    -------
    sample : CoherenceSample
        Fitted Γ₁ = 1/T1 and Γ₂ = 1/T2 in µs⁻¹.
    fits : dict
        TraceFit per stage name.  Returned if return_fits is True.

    Raises
    ------
    SequenceStageError
        If a stage fails.  Its stage attribute names the stage.
    """
    b = float(b)
    fits = {}

    f_r = truth.resonator_frequency
    width = f_r / truth.resonator_q
    fits['resonator'] = _stage('resonator', 0, 'resonator',
                               {'f_r': f_r, 'q_l': truth.resonator_q,
                                'depth': truth.resonator_depth},
                               config, (f_r - 5 * width, f_r + 5 * width), optimizer)

    try:
        nu01 = truth.field_model.nu01(b)
    except ValueError as err:
        raise SequenceStageError('spectroscopy', str(err)) from err
    if not nu01 > 0:
        raise SequenceStageError('spectroscopy', f'no qubit transition at b={b} mT')
    linewidth = truth.qubit_linewidth * 1e-3
    fits['spectroscopy'] = _stage('spectroscopy', 1, 'resonator',
                                  {'f_r': nu01, 'q_l': nu01 / linewidth, 'depth': 0.5},
                                  config, (nu01 - 5 * linewidth, nu01 + 5 * linewidth),
                                  optimizer)

    fits['rabi'] = _stage('rabi', 2, 'rabi',
                          {'t_pi': truth.rabi_t_pi, 'decay': truth.rabi_decay},
                          config, (0.0, 2 * truth.rabi_decay), optimizer)

    t1 = 1.0 / truth.gamma1(b, direction)
    fits['t1'] = _stage('t1', 3, 't1', {'t1': t1}, config, (0.0, 5 * t1), optimizer)

    t2 = 1.0 / truth.gamma2(b, direction)
    fits['ramsey'] = _stage('ramsey', 4, 'ramsey', {'t2': t2, 'detuning': 2.0 / t2},
                            config, (0.0, 5 * t2), optimizer)

    sample = CoherenceSample(b, gamma1=1.0 / fits['t1']['t1'],
                             gamma2_ramsey=1.0 / fits['ramsey']['t2'],
                             direction=direction)
    if return_fits:
        return sample, fits
    return sample

def run_sweep(sweep: FieldSweep,
              truth: SequenceTruth,
              config: TraceConfig,
              optimizer: Optional[OptimizerConfig] = None) -> pd.DataFrame:
    """
    Runs the measurement sequence at every point of a sweep.  Point i uses
    seed config.seed + i.

    Returns
    -------
    pandas.DataFrame
        Sweep-table columns b_mT, nu01_GHz, gamma1_per_us, gamma2_per_us
        and direction.
    """
    rows = []
    for i, b in enumerate(sweep):
        point_config = config.copy(seed=config.seed + i)
        sample, fits = run_sequence(b, truth, point_config, direction=sweep.direction,
                                    optimizer=optimizer, return_fits=True)
        rows.append({'b_mT': sample.b,
                     'nu01_GHz': fits['spectroscopy']['f_r'],
                     'gamma1_per_us': sample.gamma1,
                     'gamma2_per_us': sample.gamma2_ramsey,
                     'direction': sample.direction})
        logger.info('sweep point %d/%d at b=%g mT done', i + 1, len(sweep), b)

    return pd.DataFrame(rows, columns=['b_mT', 'nu01_GHz', 'gamma1_per_us',
                                       'gamma2_per_us', 'direction'])
