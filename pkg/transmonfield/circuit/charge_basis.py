# coding: utf-8

# https://numpy.org/
import numpy as np

# https://scipy.org/
from scipy.linalg import eigh_tridiagonal

# Local imports
from ..errors import ValidationError

__all__ = ['charge_basis_levels']

def charge_basis_levels(e_c: float,
                        e_j: float,
                        n_cut: int = 40,
                        n_levels: int = 6,
                        n_g: float = 0.0) -> np.ndarray:
    """
    Lowest levels of a single-junction transmon, H = 4E_C(n - n_g)² - E_J cos φ,
    diagonalized in the charge basis |n>, n = -n_cut..n_cut.  The cosine
    couples neighboring charge states only, so the matrix is tridiagonal.

    Parameters
    ----------
    e_c : float
        Charging energy E_C/h in GHz.
    e_j : float
        Josephson energy E_J/h in GHz.
    n_cut : int, optional
        Charge cutoff.  Default value is 40.
    n_levels : int, optional
        Number of levels returned.  Default value is 6.
    n_g : float, optional
        Offset charge.  Default value is 0.

    Returns
    -------
    numpy.NDArray
        The n_levels lowest levels in GHz with the ground state at 0.
    """
    if not e_c > 0:
        raise ValidationError(f'e_c must be positive, got {e_c}')
    if not e_j >= 0:
        raise ValidationError(f'e_j must be non-negative, got {e_j}')
    n_cut = int(n_cut)
    if n_levels > 2 * n_cut + 1:
        raise ValidationError('n_levels exceeds the charge basis dimension')

    n = np.arange(-n_cut, n_cut + 1)
    diag = 4.0 * e_c * (n - n_g)**2
    offdiag = np.full(2 * n_cut, -e_j / 2.0)

    levels = eigh_tridiagonal(diag, offdiag, eigvals_only=True,
                              select='i', select_range=(0, n_levels - 1))
    return levels - levels[0]
