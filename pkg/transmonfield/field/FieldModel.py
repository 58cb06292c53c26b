# coding: utf-8
# Standard Python libraries
from typing import Optional, Tuple, Union

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# https://pandas.pydata.org/
import pandas as pd

# https://matplotlib.org/
import matplotlib.pyplot as plt

# Local imports
from ..errors import ValidationError
from ..Settings import settings
from ..tools import numderivative
from ..circuit import TransmonCircuit, PhaseGridConfig, SpectrumResult, approx_transitions
from .JunctionFieldParams import JunctionFieldParams
from .GapModel import GapModel
from .FieldSweep import FieldSweep

__all__ = ['FieldModel']

class FieldModel():
    """
    Maps the applied in-plane field to the two junctions' Josephson energies
    and on to the qubit transitions.
    """
    models = ('interference', 'gap', 'both')
    methods = ('approx', 'exact')

    def __init__(self,
                 jj1: JunctionFieldParams,
                 jj2: JunctionFieldParams,
                 e_c: float,
                 model: str = 'interference',
                 gap: Optional[GapModel] = None,
                 gap_junction: int = 1,
                 method: str = 'approx',
                 grid: Optional[PhaseGridConfig] = None,
                 regime_threshold: Optional[float] = None):
        """
        Class initializer.

        Parameters
        ----------
        jj1 : JunctionFieldParams
            Field response of the first junction.
        jj2 : JunctionFieldParams
            Field response of the second junction.
        e_c : float
            Charging energy E_C/h in GHz.
        model : str, optional
            'interference' (default) uses the |sinc| response for both
            junctions.  'gap' replaces the |sinc| of the gap junction by gap
            suppression.  'both' multiplies the two for the gap junction.
        gap : GapModel, optional
            The gap model used by 'gap' and 'both'.  Default GapModel() values
            are used if not given.
        gap_junction : int, optional
            Which junction (1 or 2) the gap model applies to.  Default value
            is 1.
        method : str, optional
            'approx' (default) for the closed-form levels or 'exact' for the
            phase-grid diagonalization.
        grid : PhaseGridConfig, optional
            Grid settings for the exact method.
        regime_threshold : float, optional
            Minimum effective E_J/E_C flagged as regime_valid.  Default value
            is taken from settings.
        """
        if not isinstance(jj1, JunctionFieldParams) or not isinstance(jj2, JunctionFieldParams):
            raise TypeError('jj1 and jj2 must be JunctionFieldParams')
        if model not in self.models:
            raise ValidationError(f'model must be one of {self.models}, got {model!r}')
        if method not in self.methods:
            raise ValidationError(f'method must be one of {self.methods}, got {method!r}')
        if gap_junction not in (1, 2):
            raise ValidationError(f'gap_junction must be 1 or 2, got {gap_junction}')
        e_c = float(e_c)
        if not 0 < e_c < np.inf:
            raise ValidationError(f'e_c must be positive, got {e_c}')
        if gap is None:
            gap = GapModel()
        if grid is None:
            grid = PhaseGridConfig()
        if regime_threshold is None:
            regime_threshold = settings.regime_threshold

        self.__jj1 = jj1
        self.__jj2 = jj2
        self.__e_c = e_c
        self.__model = model
        self.__gap = gap
        self.__gap_junction = gap_junction
        self.__method = method
        self.__grid = grid
        self.__regime_threshold = float(regime_threshold)

    def __repr__(self) -> str:
        return (f'FieldModel(jj1={self.jj1!r}, jj2={self.jj2!r}, e_c={self.e_c}, '
                f'model={self.model!r}, method={self.method!r})')

    @property
    def jj1(self) -> JunctionFieldParams:
        """JunctionFieldParams: The first junction"""
        return self.__jj1

    @property
    def jj2(self) -> JunctionFieldParams:
        """JunctionFieldParams: The second junction"""
        return self.__jj2

    @property
    def e_c(self) -> float:
        """float: Charging energy in GHz"""
        return self.__e_c

    @property
    def model(self) -> str:
        """str: The critical-current model selector"""
        return self.__model

    @property
    def gap(self) -> GapModel:
        """GapModel: The gap suppression model"""
        return self.__gap

    @property
    def gap_junction(self) -> int:
        """int: The junction the gap model acts on"""
        return self.__gap_junction

    @property
    def method(self) -> str:
        """str: 'approx' or 'exact'"""
        return self.__method

    @property
    def grid(self) -> PhaseGridConfig:
        """PhaseGridConfig: Settings for exact levels"""
        return self.__grid

    @property
    def regime_threshold(self) -> float:
        """float: Minimum effective E_J/E_C flagged as regime_valid"""
        return self.__regime_threshold

    def copy(self, **kwargs) -> 'FieldModel':
        """
        Returns a new FieldModel with any of the init parameters replaced.
        """
        params = dict(jj1=self.jj1, jj2=self.jj2, e_c=self.e_c, model=self.model,
                      gap=self.gap, gap_junction=self.gap_junction, method=self.method,
                      grid=self.grid, regime_threshold=self.regime_threshold)
        params.update(kwargs)
        return FieldModel(**params)

    def swapped(self) -> 'FieldModel':
        """
        Returns the same device with the junction labels exchanged.
        """
        return self.copy(jj1=self.jj2, jj2=self.jj1, gap_junction=3 - self.gap_junction)

    def __junction_ej(self,
                      params: JunctionFieldParams,
                      number: int,
                      b: np.ndarray) -> np.ndarray:
        if self.model == 'interference' or number != self.gap_junction:
            return params.ej0 * np.asarray(params.scale(b))
        elif self.model == 'gap':
            return params.ej0 * self.gap.factor(b)
        else:
            return params.ej0 * np.asarray(params.scale(b)) * self.gap.factor(b)

    def ej(self, b: npt.ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
        """
        Josephson energies of both junctions at field b.

        Parameters
        ----------
        b : float or array-like
            Applied field in mT.

        Returns
        -------
        ej1, ej2 : numpy.NDArray
            E_J/h in GHz for each junction.
        """
        b = np.asarray(b, dtype=float)
        return self.__junction_ej(self.jj1, 1, b), self.__junction_ej(self.jj2, 2, b)

    def circuit(self, b: float) -> TransmonCircuit:
        """
        The TransmonCircuit seen at a single field value b in mT.
        """
        ej1, ej2 = self.ej(float(b))
        return TransmonCircuit(self.e_c, float(ej1), float(ej2))

    def spectrum(self, b: float) -> SpectrumResult:
        """
        The SpectrumResult at a single field value b in mT, computed with
        the model's level method.
        """
        circuit = self.circuit(b)
        if self.method == 'exact':
            return circuit.exact_levels(grid=self.grid, regime_threshold=self.regime_threshold)
        return circuit.approx_levels(3, regime_threshold=self.regime_threshold)

    def transitions(self,
                    b: npt.ArrayLike) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Transition frequencies over many field values.

        Parameters
        ----------
        b : float or array-like
            Applied field in mT.

        Returns
        -------
        nu01 : numpy.NDArray
            0-1 transition in GHz.
        nu12 : numpy.NDArray
            1-2 transition in GHz.
        regime_valid : numpy.NDArray
            Boolean transmon-regime flags.
        """
        b = np.asarray(b, dtype=float)
        if self.method == 'approx':
            ej1, ej2 = self.ej(b)
            nu01, nu12, ej_eff = approx_transitions(self.e_c, ej1, ej2)
            return nu01, nu12, ej_eff / self.e_c >= self.regime_threshold

        flat = b.reshape(-1)
        spectra = [self.spectrum(value) for value in flat]
        nu01 = np.array([s.omega01 for s in spectra]).reshape(b.shape)
        nu12 = np.array([s.omega12 for s in spectra]).reshape(b.shape)
        valid = np.array([s.regime_valid for s in spectra], dtype=bool).reshape(b.shape)
        return nu01, nu12, valid

    def nu01(self, b: npt.ArrayLike) -> Union[float, np.ndarray]:
        """
        The 0-1 transition frequency in GHz at field b in mT.
        """
        nu01 = self.transitions(b)[0]
        if np.ndim(nu01) == 0:
            return float(nu01)
        return nu01

    def frequencies(self,
                    sweep: Union[FieldSweep, npt.ArrayLike]) -> pd.DataFrame:
        """
        Evaluates the transitions over a field sweep.  The result does not
        depend on the sweep direction.

        Parameters
        ----------
        sweep : FieldSweep or array-like
            The field values in mT.

        Returns
        -------
        pandas.DataFrame
            Columns b_mT, nu01_GHz, nu12_GHz and regime_valid, one row per
            field value in sweep order.
        """
        if isinstance(sweep, FieldSweep):
            b = sweep.values
        else:
            b = FieldSweep(sweep).values
        nu01, nu12, valid = self.transitions(b)

        return pd.DataFrame({'b_mT': b,
                             'nu01_GHz': nu01,
                             'nu12_GHz': nu12,
                             'regime_valid': valid})

    def metadata(self) -> dict:
        """
        Generates a dict of simple metadata values for the model.
        """
        meta = {'e_c_GHz': self.e_c, 'model': self.model, 'method': self.method}
        for name, params in (('1', self.jj1), ('2', self.jj2)):
            for key, value in params.metadata().items():
                meta[f'jj{name}_{key}'] = value
        if self.model != 'interference':
            meta['b_c_mT'] = self.gap.b_c
            meta['gap_junction'] = self.gap_junction
        return meta

    def plot(self,
             sweep: Union[FieldSweep, npt.ArrayLike],
             n: int = 0,
             figsize: Tuple[float, float] = None,
             matplotlib_axes: Optional[plt.axes] = None,
             xlim: Optional[Tuple[float, float]] = None,
             ylim: Optional[Tuple[float, float]] = None,
             ) -> Optional[plt.figure]:
        """
        Generates a plot of ν01 vs. B.

        Parameters
        ----------
        sweep : FieldSweep or array-like
            The field values in mT.  Should be evenly spaced if n > 0.
        n : int, optional
            Indicates which derivative of ν01 to plot.  Default value is 0
            (no derivative).  Derivatives are computed numerically from the
            tabulated values.
        figsize : tuple, optional
            The figsize parameter of matplotlib.pyplot.figure to use in
            generating the figure.  Default value is (10, 6).  Ignored if
            matplotlib_axes is given.
        matplotlib_axes : matplotlib.pyplot.axes, optional
            Allows for the plot to be added to an existing plotting axes rather
            than generating a new figure.
        xlim : tuple, optional
            The range of values to plot along the x axis.  If not given will be
            set to the sweep range.
        ylim : tuple, optional
            The range of values to plot along the y axis.  If not given will
            use the default pyplot settings.

        Returns
        -------
        matplotlib.pyplot.figure
            The generated figure.  Returned if matplotlib_axes is not given.
        """
        # Initial plot setup and parameters
        if matplotlib_axes is None:
            if figsize is None:
                figsize = (10, 6)
            fig = plt.figure(figsize=figsize, dpi=72)
            ax1 = fig.add_subplot(111)
        else:
            ax1 = matplotlib_axes

        table = self.frequencies(sweep)
        b = table.b_mT.values
        ax1.plot(*numderivative(b, table.nu01_GHz.values, n=n))
        ax1.set_xlabel('B (mT)', size='x-large')

        if n == 0:
            ylabel = 'ν01 (GHz)'
        elif n == 1:
            ylabel = '∂ν01 / ∂B (GHz/mT)'
        else:
            ylabel = f'∂$^{n}$ν01 / ∂$B^{n}$'
        ax1.set_ylabel(ylabel, size='x-large')

        if xlim is None:
            xlim = (b.min(), b.max())
        ax1.set_xlim(xlim)

        if ylim is not None:
            ax1.set_ylim(ylim)

        if matplotlib_axes is None:
            return fig
