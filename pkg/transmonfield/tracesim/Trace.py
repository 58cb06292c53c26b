# coding: utf-8
# Standard Python libraries
import io
from pathlib import Path
from typing import Optional, Union

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# Local imports
from ..errors import ValidationError

__all__ = ['Trace']

class Trace():
    """
    A sampled measurement trace: time in µs or frequency in GHz against a
    normalized amplitude.
    """
    def __init__(self,
                 x: npt.ArrayLike,
                 y: npt.ArrayLike,
                 kind: Optional[str] = None):
        x = np.array(x, dtype=float).reshape(-1)
        y = np.array(y, dtype=float).reshape(-1)
        if len(x) != len(y):
            raise ValidationError(f'x and y lengths differ ({len(x)} and {len(y)})')
        if len(x) < 2 or not np.all(np.diff(x) > 0):
            raise ValidationError('x must be strictly increasing with at least 2 points')
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise ValidationError('trace values must be finite')
        self.__x = x
        self.__y = y
        self.__kind = kind

    def __repr__(self) -> str:
        return f'Trace(kind={self.kind!r}, {len(self)} points)'

    def __len__(self) -> int:
        return len(self.__x)

    @property
    def x(self) -> np.ndarray:
        """numpy.NDArray: Sample positions"""
        return self.__x

    @property
    def y(self) -> np.ndarray:
        """numpy.NDArray: Normalized amplitudes"""
        return self.__y

    @property
    def kind(self) -> Optional[str]:
        """str or None: The trace kind the samples were generated for"""
        return self.__kind

    def save(self, f: Union[str, Path, io.IOBase]):
        """
        Writes the trace as two whitespace-separated numeric columns.

        Parameters
        ----------
        f : path-like object or file-like object
            Where to write.
        """
        header = 'x y' if self.kind is None else f'{self.kind}: x y'
        np.savetxt(f, np.column_stack([self.x, self.y]), fmt='%.17g', header=header)

    @classmethod
    def load(cls,
             f: Union[str, Path, io.IOBase],
             kind: Optional[str] = None) -> 'Trace':
        """
        Reads a trace written by save.
        """
        data = np.loadtxt(f, ndmin=2)
        if data.shape[1] != 2:
            raise ValidationError(f'trace files need 2 columns, found {data.shape[1]}')
        return cls(data[:, 0], data[:, 1], kind=kind)
