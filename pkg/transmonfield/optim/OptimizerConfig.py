# coding: utf-8
# Standard Python libraries
from typing import Optional

# Local imports
from ..Settings import settings

__all__ = ['OptimizerConfig']

class OptimizerConfig():
    """
    Budget and tolerances shared by the optimizers.
    """
    def __init__(self,
                 max_iterations: int = 2000,
                 param_tol: float = 1e-9,
                 objective_tol: float = 1e-12,
                 seed: Optional[int] = None,
                 n_starts: int = 8):
        """
        Class initializer.

        Parameters
        ----------
        max_iterations : int, optional
            Iteration budget.  Default value is 2000.
        param_tol : float, optional
            Simplex diameter or relative step size below which a search is
            converged.  Default value is 1e-9.
        objective_tol : float, optional
            Objective decrease below which a damped least-squares search is
            converged.  Default value is 1e-12.
        seed : int, optional
            Seed for multi-start perturbations.  Default value is taken from
            settings.
        n_starts : int, optional
            Number of starts for multi-start fits, the initial guess
            included.  Default value is 8.
        """
        self.max_iterations = max_iterations
        self.param_tol = param_tol
        self.objective_tol = objective_tol
        self.seed = seed
        self.n_starts = n_starts

    def __repr__(self) -> str:
        return (f'OptimizerConfig(max_iterations={self.max_iterations}, '
                f'param_tol={self.param_tol}, objective_tol={self.objective_tol}, '
                f'seed={self.seed}, n_starts={self.n_starts})')

    @property
    def max_iterations(self) -> int:
        """int: Iteration budget"""
        return self.__max_iterations

    @max_iterations.setter
    def max_iterations(self, value: int):
        value = int(value)
        if value < 1:
            raise ValueError(f'max_iterations must be at least 1, got {value}')
        self.__max_iterations = value

    @property
    def param_tol(self) -> float:
        """float: Parameter convergence tolerance"""
        return self.__param_tol

    @param_tol.setter
    def param_tol(self, value: float):
        value = float(value)
        if not value > 0:
            raise ValueError(f'param_tol must be positive, got {value}')
        self.__param_tol = value

    @property
    def objective_tol(self) -> float:
        """float: Objective decrease convergence tolerance"""
        return self.__objective_tol

    @objective_tol.setter
    def objective_tol(self, value: float):
        value = float(value)
        if not value > 0:
            raise ValueError(f'objective_tol must be positive, got {value}')
        self.__objective_tol = value

    @property
    def seed(self) -> int:
        """int: Multi-start seed"""
        return self.__seed

    @seed.setter
    def seed(self, value: Optional[int]):
        if value is None:
            value = settings.default_seed
        value = int(value)
        if value < 0:
            raise ValueError(f'seed must be non-negative, got {value}')
        self.__seed = value

    @property
    def n_starts(self) -> int:
        """int: Number of multi-start runs"""
        return self.__n_starts

    @n_starts.setter
    def n_starts(self, value: int):
        value = int(value)
        if value < 1:
            raise ValueError(f'n_starts must be at least 1, got {value}')
        self.__n_starts = value
