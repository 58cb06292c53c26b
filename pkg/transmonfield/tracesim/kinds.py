# coding: utf-8
# Standard Python libraries
from typing import Dict, Tuple, Union

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# Local imports
from ..errors import ValidationError

__all__ = ['TraceKind', 'RabiKind', 'T1Kind', 'RamseyKind', 'ResonatorKind',
           'KINDS', 'get_kind', 'fft_frequency', 'rms_decay']

def fft_frequency(x: np.ndarray,
                  y: np.ndarray,
                  pad: int = 8) -> float:
    """
    Dominant oscillation frequency of an evenly sampled signal from the
    zero-padded FFT peak, refined by parabolic interpolation.

    Parameters
    ----------
    x : numpy.NDArray
        Evenly spaced sample times.
    y : numpy.NDArray
        Signal values.
    pad : int, optional
        Zero-padding factor.  Default value is 8.

    Returns
    -------
    float
        Frequency in inverse units of x.
    """
    n = len(x)
    dt = x[1] - x[0]
    spectrum = np.abs(np.fft.rfft(y - np.mean(y), n=pad * n))
    freqs = np.fft.rfftfreq(pad * n, dt)

    k = int(np.argmax(spectrum[1:])) + 1
    if 0 < k < len(spectrum) - 1:
        left, mid, right = spectrum[k - 1], spectrum[k], spectrum[k + 1]
        denom = left - 2 * mid + right
        if denom != 0:
            return float(freqs[k] + 0.5 * (left - right) / denom * (freqs[1] - freqs[0]))
    return float(freqs[k])

def rms_decay(x: np.ndarray,
              y: np.ndarray) -> float:
    """
    Decay time of an exponential envelope from the RMS of the first half of
    the trace against the second half.  Returns ten times the span when the
    envelope hardly decays.
    """
    span = x[-1] - x[0]
    half = len(y) // 2
    ratio = np.sqrt(np.mean(y[:half]**2)) / np.sqrt(np.mean(y[half:]**2))
    if not ratio > 1.01:
        return 10.0 * span
    return span / (2.0 * np.log(ratio))

class TraceKind():
    """
    Base class for trace shapes.  Subclasses define the parameter names,
    the model curve, heuristic initial guesses, and the scale of each
    parameter used to normalize the fit.
    """
    name = ''
    parameter_names: Tuple[str, ...] = ()
    axis = 'time'

    def __repr__(self) -> str:
        return f'{type(self).__name__}()'

    def as_array(self, params: Union[dict, npt.ArrayLike]) -> np.ndarray:
        """
        Converts a parameter dict (or sequence in parameter_names order) to
        an array, validating names and values.
        """
        if hasattr(params, 'keys'):
            missing = set(self.parameter_names) - set(params.keys())
            unknown = set(params.keys()) - set(self.parameter_names)
            if len(missing) > 0 or len(unknown) > 0:
                raise ValidationError(f'{self.name} parameters must be {list(self.parameter_names)}, '
                                      f'got {sorted(params.keys())}')
            values = np.array([params[name] for name in self.parameter_names], dtype=float)
        else:
            values = np.array(params, dtype=float).reshape(-1)
            if len(values) != len(self.parameter_names):
                raise ValidationError(f'{self.name} takes {len(self.parameter_names)} parameters')
        if not self.valid(values):
            raise ValidationError(f'invalid {self.name} parameters '
                                  f'{dict(zip(self.parameter_names, values.tolist()))}')
        return values

    def as_dict(self, values: npt.ArrayLike) -> Dict[str, float]:
        """Maps a parameter array to a dict keyed by parameter_names"""
        return dict(zip(self.parameter_names, np.asarray(values, dtype=float).tolist()))

    def valid(self, values: np.ndarray) -> bool:
        """bool: Whether the parameter values are physical"""
        return bool(np.all(np.isfinite(values)) and np.all(values > 0))

    def model(self, x: np.ndarray, values: np.ndarray) -> np.ndarray:
        raise NotImplementedError('Not implemented for this kind')

    def guess(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        raise NotImplementedError('Not implemented for this kind')

    def scales(self, guess: np.ndarray) -> np.ndarray:
        """Normalization scale of each parameter, by default the guess itself"""
        return np.abs(guess)

class RabiKind(TraceKind):
    """
    Damped Rabi oscillation cos(πt/t_pi)·exp(-t/decay).
    """
    name = 'rabi'
    parameter_names = ('t_pi', 'decay')

    def model(self, x, values):
        t_pi, decay = values
        return np.cos(np.pi * x / t_pi) * np.exp(-x / decay)

    def guess(self, x, y):
        frequency = fft_frequency(x, y)
        if not frequency > 0:
            raise ValidationError('no oscillation found in the rabi trace')
        return np.array([1.0 / (2.0 * frequency), rms_decay(x, y)])

class T1Kind(TraceKind):
    """
    Energy relaxation exp(-t/T1).
    """
    name = 't1'
    parameter_names = ('t1',)

    def model(self, x, values):
        return np.exp(-x / values[0])

    def guess(self, x, y):
        # Log-linear slope over the points clearly above the noise
        use = y > 0.1
        if np.sum(use) >= 2:
            slope = np.polyfit(x[use], np.log(y[use]), 1)[0]
            if slope < 0:
                return np.array([-1.0 / slope])
        return np.array([(x[-1] - x[0]) / 2.0])

class RamseyKind(TraceKind):
    """
    Ramsey fringes cos(2π·detuning·t)·exp(-t/T2), detuning in MHz.
    """
    name = 'ramsey'
    parameter_names = ('t2', 'detuning')

    def model(self, x, values):
        t2, detuning = values
        return np.cos(2.0 * np.pi * detuning * x) * np.exp(-x / t2)

    def guess(self, x, y):
        frequency = fft_frequency(x, y)
        if not frequency > 0:
            raise ValidationError('no fringes found in the ramsey trace')
        return np.array([rms_decay(x, y), frequency])

class ResonatorKind(TraceKind):
    """
    Lorentzian transmission dip 1 - depth/(1 + 4Q_l²((f - f_r)/f_r)²), f in GHz.
    """
    name = 'resonator'
    parameter_names = ('f_r', 'q_l', 'depth')
    axis = 'frequency'

    def model(self, x, values):
        f_r, q_l, depth = values
        return 1.0 - depth / (1.0 + 4.0 * q_l**2 * ((x - f_r) / f_r)**2)

    def guess(self, x, y):
        i_min = int(np.argmin(y))
        f_r = x[i_min]
        depth = 1.0 - y[i_min]
        if not depth > 0:
            raise ValidationError('no dip found in the resonator trace')
        below = np.flatnonzero(y < 1.0 - depth / 2.0)
        width = max(x[below[-1]] - x[below[0]], x[1] - x[0])
        return np.array([f_r, f_r / width, depth])

    def scales(self, guess):
        f_r, q_l, depth = guess
        return np.array([f_r / q_l, q_l, depth])

KINDS = {kind.name: kind for kind in (RabiKind(), T1Kind(), RamseyKind(), ResonatorKind())}

def get_kind(kind: Union[str, TraceKind]) -> TraceKind:
    """
    Returns the TraceKind for a name.
    """
    if isinstance(kind, TraceKind):
        return kind
    try:
        return KINDS[kind]
    except KeyError as err:
        raise ValidationError(f'unknown trace kind {kind!r}; allowed are {sorted(KINDS)}') from err
