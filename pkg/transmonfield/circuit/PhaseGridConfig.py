# coding: utf-8

__all__ = ['PhaseGridConfig']

class PhaseGridConfig():
    """
    Discretization settings for the exact phase-grid diagonalization.
    """
    def __init__(self,
                 points: int = 512,
                 max_levels: int = 6,
                 rel_tol: float = 1e-9,
                 max_points: int = 8192):
        """
        Class initializer.

        Parameters
        ----------
        points : int, optional
            Starting number of phase grid points on [0, 2π).  Must be a power
            of two and at least 64.  Default value is 512.
        max_levels : int, optional
            The number of lowest levels to keep.  At least 3 are always
            computed so that ω12 is defined.  Default value is 6.
        rel_tol : float, optional
            Grid doubling stops once ω01 changes by less than this relative
            amount.  Default value is 1e-9.
        max_points : int, optional
            The grid size above which doubling gives up.  Default value is
            8192.
        """
        self.points = points
        self.max_levels = max_levels
        self.rel_tol = rel_tol
        self.max_points = max_points

    def __repr__(self) -> str:
        return (f'PhaseGridConfig(points={self.points}, max_levels={self.max_levels}, '
                f'rel_tol={self.rel_tol}, max_points={self.max_points})')

    @property
    def points(self) -> int:
        """int: The starting number of grid points"""
        return self.__points

    @points.setter
    def points(self, value: int):
        value = int(value)
        if value < 64 or value & (value - 1) != 0:
            raise ValueError(f'points must be a power of two >= 64, got {value}')
        self.__points = value

    @property
    def max_levels(self) -> int:
        """int: The number of levels returned"""
        return self.__max_levels

    @max_levels.setter
    def max_levels(self, value: int):
        value = int(value)
        if value < 2:
            raise ValueError('max_levels must be at least 2')
        self.__max_levels = value

    @property
    def rel_tol(self) -> float:
        """float: Relative convergence tolerance on ω01"""
        return self.__rel_tol

    @rel_tol.setter
    def rel_tol(self, value: float):
        value = float(value)
        if not value > 0:
            raise ValueError('rel_tol must be positive')
        self.__rel_tol = value

    @property
    def max_points(self) -> int:
        """int: Cap on the number of grid points"""
        return self.__max_points

    @max_points.setter
    def max_points(self, value: int):
        value = int(value)
        if value < self.points:
            raise ValueError('max_points must not be smaller than points')
        self.__max_points = value
