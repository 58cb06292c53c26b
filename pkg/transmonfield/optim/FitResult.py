# coding: utf-8
# Standard Python libraries
from typing import Optional, Sequence

# https://numpy.org/
import numpy as np
import numpy.typing as npt

# https://github.com/usnistgov/DataModelDict
from DataModelDict import DataModelDict as DM

__all__ = ['FitResult']

class FitResult():
    """
    Outcome of a minimization or fit.
    """
    def __init__(self,
                 params: npt.ArrayLike,
                 residual: float,
                 iterations: int,
                 converged: bool,
                 covariance_estimate: Optional[npt.ArrayLike] = None,
                 names: Optional[Sequence[str]] = None,
                 method: str = '',
                 message: str = '',
                 n_points: Optional[int] = None):
        """
        Class initializer.

        Parameters
        ----------
        params : array-like
            The optimal parameter vector.
        residual : float
            The objective value at params.  For least-squares objectives this
            is the sum of squared residuals.
        iterations : int
            Number of iterations used.
        converged : bool
            True if a convergence criterion was met within the budget.
        covariance_estimate : array-like, optional
            Parameter covariance estimate, least-squares methods only.
        names : list of str, optional
            Parameter names, one per entry of params.
        method : str, optional
            The method that produced the result.
        message : str, optional
            Description of why the search stopped.
        n_points : int, optional
            Number of residuals the objective summed over.
        """
        self.__params = np.array(params, dtype=float).reshape(-1)
        self.__residual = float(residual)
        self.__iterations = int(iterations)
        self.__converged = bool(converged)
        if covariance_estimate is not None:
            covariance_estimate = np.asarray(covariance_estimate, dtype=float)
        self.__covariance_estimate = covariance_estimate
        if names is not None:
            names = list(names)
            if len(names) != len(self.__params):
                raise ValueError('names and params must have the same length')
        self.__names = names
        self.__method = method
        self.__message = message
        self.__n_points = n_points

    def __repr__(self) -> str:
        return (f'FitResult(method={self.method!r}, converged={self.converged}, '
                f'iterations={self.iterations}, residual={self.residual:.6g})')

    @property
    def params(self) -> np.ndarray:
        """numpy.NDArray: The optimal parameters"""
        return self.__params

    @property
    def residual(self) -> float:
        """float: Objective value at params"""
        return self.__residual

    @property
    def iterations(self) -> int:
        """int: Iterations used"""
        return self.__iterations

    @property
    def converged(self) -> bool:
        """bool: Whether a convergence criterion was met"""
        return self.__converged

    @property
    def covariance_estimate(self) -> Optional[np.ndarray]:
        """numpy.NDArray or None: Parameter covariance estimate"""
        return self.__covariance_estimate

    @property
    def names(self) -> Optional[list]:
        """list or None: Parameter names"""
        return self.__names

    @property
    def method(self) -> str:
        """str: Method that produced the result"""
        return self.__method

    @property
    def message(self) -> str:
        """str: Stop reason"""
        return self.__message

    @property
    def n_points(self) -> Optional[int]:
        """int or None: Number of residuals in the objective"""
        return self.__n_points

    @property
    def stderr(self) -> Optional[np.ndarray]:
        """numpy.NDArray or None: Square roots of the covariance diagonal"""
        if self.covariance_estimate is None:
            return None
        return np.sqrt(np.abs(np.diag(self.covariance_estimate)))

    def as_dict(self) -> dict:
        """
        Returns the parameters keyed by name.
        """
        if self.names is None:
            names = [f'x{i}' for i in range(len(self.params))]
        else:
            names = self.names
        return dict(zip(names, self.params.tolist()))

    def metadata(self) -> dict:
        """
        Generates a flat dict of the result, one entry per parameter plus
        the convergence values.
        """
        meta = self.as_dict()
        stderr = self.stderr
        if stderr is not None:
            for name, err in zip(meta.copy(), stderr):
                meta[f'{name}_stderr'] = float(err)
        meta['residual'] = self.residual
        meta['iterations'] = self.iterations
        meta['converged'] = self.converged
        meta['method'] = self.method
        return meta

    def build_model(self) -> DM:
        """
        Returns the result as a DataModelDict key-value report.
        """
        model = DM()
        model['fit-result'] = DM()
        report = model['fit-result']
        report['method'] = self.method
        report['converged'] = self.converged
        report['iterations'] = self.iterations
        report['residual'] = self.residual
        if self.message:
            report['message'] = self.message
        stderr = self.stderr
        for i, (name, value) in enumerate(self.as_dict().items()):
            param = DM()
            param['name'] = name
            param['value'] = value
            if stderr is not None:
                param['stderr'] = float(stderr[i])
            report.append('parameter', param)
        return model
