# coding: utf-8
# Standard Python libraries
import logging
from typing import Optional

# https://numpy.org/
import numpy as np

# https://scipy.org/
from scipy.linalg import circulant, eigh

# Local imports
from ..errors import ConvergenceError, ValidationError
from ..Settings import settings
from .PhaseGridConfig import PhaseGridConfig
from .SpectrumResult import SpectrumResult

logger = logging.getLogger(__name__)

def series_potential(phi: np.ndarray,
                     ej1: float,
                     ej2: float) -> np.ndarray:
    """
    Potential of two junctions in series, (E_J,1 + E_J,2) - sqrt(E_J,1² + E_J,2²
    + 2 E_J,1 E_J,2 cos φ), shifted to zero at φ = 0.  Evaluated in the
    rationalized form 4 E_J,1 E_J,2 sin²(φ/2) / (E_J,1 + E_J,2 + sqrt(...)) which
    keeps full precision when one energy is many orders larger.
    """
    lo = min(ej1, ej2)
    hi = max(ej1, ej2)
    if hi == 0:
        return np.zeros_like(phi)
    root = np.sqrt(lo * lo + hi * hi + 2.0 * lo * hi * np.cos(phi))
    return 4.0 * lo * hi * np.sin(phi / 2.0)**2 / (lo + hi + root)

def grid_levels(e_c: float,
                ej1: float,
                ej2: float,
                points: int,
                n_levels: int,
                phase_offset: float = 0.0) -> np.ndarray:
    """
    Lowest eigenvalues of H = 4E_C N² + V(φ) on a uniform periodic phase
    grid, with N² applied spectrally.

    Parameters
    ----------
    e_c : float
        Charging energy in GHz.
    ej1, ej2 : float
        Josephson energies in GHz.
    points : int
        Number of grid points on [0, 2π).
    n_levels : int
        Number of eigenvalues returned.
    phase_offset : float, optional
        Shift applied to the potential argument.

    Returns
    -------
    numpy.NDArray
        Lowest n_levels eigenvalues in GHz, unshifted.
    """
    phi = 2.0 * np.pi * np.arange(points) / points
    k = np.fft.fftfreq(points, 1.0 / points)

    kinetic = circulant(np.real(np.fft.ifft(4.0 * e_c * k**2)))
    hamiltonian = kinetic + np.diag(series_potential(phi + phase_offset, ej1, ej2))

    return eigh(hamiltonian, eigvals_only=True, subset_by_index=[0, n_levels - 1])

def exact_levels(self,
                 grid: Optional[PhaseGridConfig] = None,
                 regime_threshold: Optional[float] = None,
                 strict_nodes: bool = False,
                 phase_offset: float = 0.0) -> SpectrumResult:
    """
    Energy levels from numerically diagonalizing the full series-junction
    Hamiltonian H = 4E_C N² - sqrt(E_J,1² + E_J,2² + 2 E_J,1 E_J,2 cos φ).
    The grid is doubled until ω01 changes by less than grid.rel_tol.

    Parameters
    ----------
    grid : PhaseGridConfig, optional
        Discretization settings.  Default values are used if not given.
    regime_threshold : float, optional
        Minimum effective E_J/E_C for regime_valid.  Default value is taken
        from settings.
    strict_nodes : bool, optional
        If True, a vanishing effective E_J raises an error.  Default value is
        False.
    phase_offset : float, optional
        Constant added to φ in the potential.  The spectrum does not depend
        on it.  Default value is 0.

    Returns
    -------
    SpectrumResult
        The converged levels, ground state at 0.

    Raises
    ------
    ConvergenceError
        If ω01 has not converged by grid.max_points.
    """
    if grid is None:
        grid = PhaseGridConfig()
    if regime_threshold is None:
        regime_threshold = settings.regime_threshold

    ej_eff = self.ej_eff
    if ej_eff == 0 and strict_nodes:
        raise ValidationError('effective Josephson energy is zero (sinc node)')

    n_keep = max(grid.max_levels, 3)
    points = grid.points
    levels = grid_levels(self.e_c, self.ej1, self.ej2, points, n_keep, phase_offset)
    levels = levels - levels[0]
    while True:
        points *= 2
        if points > grid.max_points:
            raise ConvergenceError(f'omega01 not converged to rel_tol={grid.rel_tol} '
                                   f'within {grid.max_points} grid points')
        finer = grid_levels(self.e_c, self.ej1, self.ej2, points, n_keep, phase_offset)
        finer = finer - finer[0]

        change = abs(finer[1] - levels[1])
        levels = finer
        logger.debug('phase grid %d points: omega01 = %.15g GHz', points, finer[1])
        if change <= grid.rel_tol * abs(finer[1]):
            break

    return SpectrumResult(levels=levels[:grid.max_levels],
                          omega01=levels[1] - levels[0],
                          omega12=levels[2] - levels[1],
                          regime_valid=ej_eff / self.e_c >= regime_threshold,
                          ej_eff=ej_eff,
                          method='exact')
