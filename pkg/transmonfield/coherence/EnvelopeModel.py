# coding: utf-8
# Standard Python libraries
from typing import Optional, Tuple, Union

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# https://matplotlib.org/
import matplotlib.pyplot as plt

# https://github.com/usnistgov/DataModelDict
from DataModelDict import DataModelDict as DM

# Local imports
from ..errors import ValidationError

__all__ = ['EnvelopeModel']

class EnvelopeModel():
    """
    Parabolic lower envelope of the decay rate, Γ = Γ_const + C(B - B_offs)².
    Rates in kHz, fields in mT.
    """
    def __init__(self,
                 gamma_const: float = 53.4,
                 c: float = 0.785,
                 b_offs: float = 2.25):
        """
        Class initializer.

        Parameters
        ----------
        gamma_const : float, optional
            Field-independent rate in kHz.  Default value is 53.4.
        c : float, optional
            Curvature in kHz/mT².  Default value is 0.785.
        b_offs : float, optional
            Field of the minimum in mT.  Default value is 2.25.
        """
        self.gamma_const = gamma_const
        self.c = c
        self.b_offs = b_offs

    def __repr__(self) -> str:
        return f'EnvelopeModel(gamma_const={self.gamma_const}, c={self.c}, b_offs={self.b_offs})'

    @property
    def gamma_const(self) -> float:
        """float: Field-independent rate Γ_const in kHz"""
        return self.__gamma_const

    @gamma_const.setter
    def gamma_const(self, value: float):
        value = float(value)
        if not 0 <= value < np.inf:
            raise ValidationError(f'gamma_const must be finite and non-negative, got {value}')
        self.__gamma_const = value

    @property
    def c(self) -> float:
        """float: Curvature C in kHz/mT²"""
        return self.__c

    @c.setter
    def c(self, value: float):
        value = float(value)
        if not 0 <= value < np.inf:
            raise ValidationError(f'c must be finite and non-negative, got {value}')
        self.__c = value

    @property
    def b_offs(self) -> float:
        """float: Field B_offs of the envelope minimum in mT"""
        return self.__b_offs

    @b_offs.setter
    def b_offs(self, value: float):
        value = float(value)
        if not np.isfinite(value):
            raise ValidationError(f'b_offs must be finite, got {value}')
        self.__b_offs = value

    def nonhysteretic(self, b: npt.ArrayLike) -> Union[float, np.ndarray]:
        """The field-dependent part C(B - B_offs)² in kHz"""
        value = self.c * (np.asarray(b, dtype=float) - self.b_offs)**2
        if value.ndim == 0:
            return float(value)
        return value

    def rate(self, b: npt.ArrayLike) -> Union[float, np.ndarray]:
        """
        Envelope decay rate in kHz at field b in mT.
        """
        return self.gamma_const + self.nonhysteretic(b)

    def metadata(self) -> dict:
        """
        Generates a dict of simple metadata values.
        """
        return {'gamma_const_kHz': self.gamma_const,
                'c_kHz_per_mT2': self.c,
                'b_offs_mT': self.b_offs}

    def build_model(self) -> DM:
        """
        Returns the envelope as a DataModelDict with value/unit entries.
        """
        model = DM()
        model['envelope-model'] = DM()
        model['envelope-model']['gamma-const'] = DM([('value', self.gamma_const), ('unit', 'kHz')])
        model['envelope-model']['curvature'] = DM([('value', self.c), ('unit', 'kHz/mT^2')])
        model['envelope-model']['b-offs'] = DM([('value', self.b_offs), ('unit', 'mT')])
        return model

    def plot(self,
             b: npt.ArrayLike,
             gamma1_khz: Optional[npt.ArrayLike] = None,
             figsize: Tuple[float, float] = None,
             matplotlib_axes: Optional[plt.axes] = None,
             xlim: Optional[Tuple[float, float]] = None,
             ylim: Optional[Tuple[float, float]] = None,
             ) -> Optional[plt.figure]:
        """
        Generates a plot of the envelope, optionally over measured rates.

        Parameters
        ----------
        b : array-like
            Field values in mT.
        gamma1_khz : array-like, optional
            Decay rates in kHz at b, drawn as points.
        figsize : tuple, optional
            The figsize parameter of matplotlib.pyplot.figure to use in
            generating the figure.  Default value is (10, 6).  Ignored if
            matplotlib_axes is given.
        matplotlib_axes : matplotlib.pyplot.axes, optional
            Allows for the plot to be added to an existing plotting axes rather
            than generating a new figure.
        xlim : tuple, optional
            The range of values to plot along the x axis.
        ylim : tuple, optional
            The range of values to plot along the y axis.

        Returns
        -------
        matplotlib.pyplot.figure
            The generated figure.  Returned if matplotlib_axes is not given.
        """
        if matplotlib_axes is None:
            if figsize is None:
                figsize = (10, 6)
            fig = plt.figure(figsize=figsize, dpi=72)
            ax1 = fig.add_subplot(111)
        else:
            ax1 = matplotlib_axes

        b = np.asarray(b, dtype=float)
        if gamma1_khz is not None:
            ax1.plot(b, gamma1_khz, 'o')
        bfine = np.linspace(b.min(), b.max(), 401)
        ax1.plot(bfine, self.rate(bfine))
        ax1.set_xlabel('B (mT)', size='x-large')
        ax1.set_ylabel('Γ₁ (kHz)', size='x-large')

        if xlim is not None:
            ax1.set_xlim(xlim)
        if ylim is not None:
            ax1.set_ylim(ylim)

        if matplotlib_axes is None:
            return fig
