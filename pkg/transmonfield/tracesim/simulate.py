# coding: utf-8
# Standard Python libraries
from typing import Union

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# Local imports
from .kinds import TraceKind, get_kind
from .Trace import Trace
from .TraceConfig import TraceConfig

__all__ = ['simulate_trace']

def simulate_trace(kind: Union[str, TraceKind],
                   params: Union[dict, npt.ArrayLike],
                   config: TraceConfig) -> Trace:
    """
    Generates a synthetic trace.

    Parameters
    ----------
    kind : str or TraceKind
        'rabi' (t_pi, decay), 't1' (t1), 'ramsey' (t2, detuning) or
        'resonator' (f_r, q_l, depth).  Times in µs, detuning in MHz and
        frequencies in GHz.
    params : dict or array-like
        The kind's parameters by name or in order.
    config : TraceConfig
        Sampling span, number of points, noise amplitude and seed.

    Returns
    -------
    Trace
        The model curve plus Gaussian noise drawn from config.seed.
    """
    kind = get_kind(kind)
    values = kind.as_array(params)

    x = config.x()
    y = kind.model(x, values)
    if config.noise_sigma > 0:
        rng = np.random.default_rng(config.seed)
        y = y + rng.normal(0.0, config.noise_sigma, size=len(x))

    return Trace(x, y, kind=kind.name)
