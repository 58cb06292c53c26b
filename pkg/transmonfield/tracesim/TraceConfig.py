# coding: utf-8
# Standard Python libraries
from typing import Optional, Tuple

# https://numpy.org/
import numpy as np

# Local imports
from ..errors import ValidationError
from ..Settings import settings

__all__ = ['TraceConfig']

class TraceConfig():
    """
    Sampling and noise settings for a synthetic trace.
    """
    def __init__(self,
                 seed: Optional[int] = None,
                 noise_sigma: float = 0.0,
                 n_points: int = 101,
                 span: Tuple[float, float] = (0.0, 1.0)):
        """
        Class initializer.

        Parameters
        ----------
        seed : int, optional
            Seed of the noise generator.  Default value is taken from
            settings.
        noise_sigma : float, optional
            Standard deviation of the additive Gaussian noise on the
            normalized amplitude.  Default value is 0.
        n_points : int, optional
            Number of samples, at least 8.  Default value is 101.
        span : tuple, optional
            (start, stop) of the sweep, in µs for time traces and GHz for
            frequency traces.  Default value is (0, 1).
        """
        self.seed = seed
        self.noise_sigma = noise_sigma
        self.n_points = n_points
        self.span = span

    def __repr__(self) -> str:
        return (f'TraceConfig(seed={self.seed}, noise_sigma={self.noise_sigma}, '
                f'n_points={self.n_points}, span={self.span})')

    @property
    def seed(self) -> int:
        """int: Noise seed"""
        return self.__seed

    @seed.setter
    def seed(self, value: Optional[int]):
        if value is None:
            value = settings.default_seed
        value = int(value)
        if value < 0:
            raise ValidationError(f'seed must be non-negative, got {value}')
        self.__seed = value

    @property
    def noise_sigma(self) -> float:
        """float: Gaussian noise amplitude"""
        return self.__noise_sigma

    @noise_sigma.setter
    def noise_sigma(self, value: float):
        value = float(value)
        if not 0 <= value < np.inf:
            raise ValidationError(f'noise_sigma must be finite and non-negative, got {value}')
        self.__noise_sigma = value

    @property
    def n_points(self) -> int:
        """int: Number of samples"""
        return self.__n_points

    @n_points.setter
    def n_points(self, value: int):
        value = int(value)
        if value < 8:
            raise ValidationError(f'n_points must be at least 8, got {value}')
        self.__n_points = value

    @property
    def span(self) -> Tuple[float, float]:
        """tuple: (start, stop) of the sweep"""
        return self.__span

    @span.setter
    def span(self, value: Tuple[float, float]):
        start, stop = (float(v) for v in value)
        if not (np.isfinite(start) and np.isfinite(stop) and start < stop):
            raise ValidationError(f'span must be finite with start < stop, got {value}')
        self.__span = (start, stop)

    def x(self) -> np.ndarray:
        """numpy.NDArray: The n_points evenly spaced sample positions"""
        return np.linspace(self.span[0], self.span[1], self.n_points)

    def copy(self, **kwargs) -> 'TraceConfig':
        """
        Returns a new TraceConfig with any of the init parameters replaced.
        """
        params = dict(seed=self.seed, noise_sigma=self.noise_sigma,
                      n_points=self.n_points, span=self.span)
        params.update(kwargs)
        return TraceConfig(**params)
