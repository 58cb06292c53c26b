# coding: utf-8
# Standard Python libraries
from typing import Iterator

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# Local imports
from ..errors import ValidationError

__all__ = ['FieldSweep']

class FieldSweep():
    """
    An ordered list of applied field values in mT with the sweep direction.
    """
    directions = ('up', 'down')

    def __init__(self,
                 values: npt.ArrayLike,
                 direction: str = 'up'):
        """
        Class initializer.

        Parameters
        ----------
        values : array-like
            Field values in mT, in the order applied.
        direction : str, optional
            'up' (default) or 'down'.
        """
        values = np.array(values, dtype=float).reshape(-1)
        if not np.all(np.isfinite(values)):
            raise ValidationError('sweep field values must be finite')
        if direction not in self.directions:
            raise ValidationError(f'direction must be one of {self.directions}, got {direction!r}')
        self.__values = values
        self.__values.flags.writeable = False
        self.__direction = direction

    @classmethod
    def from_range(cls,
                   start: float,
                   stop: float,
                   step: float,
                   direction: str = 'up') -> 'FieldSweep':
        """
        Builds an evenly stepped sweep from start to stop inclusive.

        Parameters
        ----------
        start : float
            First field in mT.
        stop : float
            Last field in mT.
        step : float
            Positive step size in mT.
        direction : str, optional
            'up' (default) or 'down'.  With 'down' the values run from the
            larger bound to the smaller.
        """
        step = float(step)
        if not step > 0:
            raise ValidationError(f'step must be positive, got {step}')
        lo = min(start, stop)
        hi = max(start, stop)
        n = int(np.floor((hi - lo) / step + 1e-9)) + 1
        values = lo + step * np.arange(n)
        if direction == 'down':
            values = values[::-1]
        return cls(values, direction=direction)

    def __repr__(self) -> str:
        return f'FieldSweep({len(self)} points, direction={self.direction!r})'

    def __len__(self) -> int:
        return len(self.__values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.__values)

    @property
    def values(self) -> np.ndarray:
        """numpy.NDArray: Field values in mT (read only)"""
        return self.__values

    @property
    def direction(self) -> str:
        """str: 'up' or 'down'"""
        return self.__direction
