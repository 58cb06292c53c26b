import pytest
import numpy as np
from DataModelDict import DataModelDict as DM
from transmonfield.errors import ValidationError
from transmonfield.optim import FitResult, OptimizerConfig, minimize, methods

def quadratic(x):
    return (x[0] - 3)**2 + 2 * (x[1] + 1)**2

def quadratic_residuals(x):
    return np.array([x[0] - 3, np.sqrt(2) * (x[1] + 1)])

def rosenbrock(x):
    return (1 - x[0])**2 + 100 * (x[1] - x[0]**2)**2

def rosenbrock_residuals(x):
    return np.array([1 - x[0], 10 * (x[1] - x[0]**2)])

def test_quadratic_simplex():
    result = minimize(quadratic, [0.0, 0.0], method='simplex')
    assert result.converged
    assert np.allclose(result.params, [3.0, -1.0], atol=1e-6)
    assert result.residual < 1e-10

def test_quadratic_gauss_newton():
    result = minimize(quadratic_residuals, [0.0, 0.0], method='gauss-newton-damped')
    assert result.converged
    assert np.allclose(result.params, [3.0, -1.0], atol=1e-6)
    assert result.method == 'gauss-newton-damped'

def test_rosenbrock():
    result = minimize(rosenbrock, [-1.2, 1.0],
                      OptimizerConfig(max_iterations=5000, param_tol=1e-12),
                      method='simplex')
    assert np.allclose(result.params, [1.0, 1.0], atol=1e-4)

    result = minimize(rosenbrock_residuals, [-1.2, 1.0], method='gauss-newton-damped')
    assert np.allclose(result.params, [1.0, 1.0], atol=1e-4)

def test_budget():
    for method, fun in zip(methods, (rosenbrock, rosenbrock_residuals)):
        result = minimize(fun, [-1.2, 1.0], OptimizerConfig(max_iterations=1), method=method)
        assert not result.converged
        assert result.iterations == 1

        # Best point so far is returned
        assert result.residual <= rosenbrock([-1.2, 1.0])

def test_invalid():
    with pytest.raises(ValueError):
        minimize(lambda x: np.nan, [0.0])
    with pytest.raises(ValueError):
        minimize(lambda x: np.array([np.inf]), [0.0], method='gauss-newton-damped')
    with pytest.raises(ValidationError):
        minimize(quadratic, [0.0, 0.0], method='bfgs')
    with pytest.raises(ValidationError):
        minimize(quadratic, [])

def test_optimizer_config():
    config = OptimizerConfig(seed=4)
    assert config.max_iterations == 2000
    assert config.param_tol == 1e-9
    assert config.objective_tol == 1e-12
    assert config.seed == 4
    assert config.n_starts == 8

    with pytest.raises(ValueError):
        OptimizerConfig(max_iterations=0)
    with pytest.raises(ValueError):
        OptimizerConfig(param_tol=0.0)
    with pytest.raises(ValueError):
        OptimizerConfig(objective_tol=-1.0)
    with pytest.raises(ValueError):
        OptimizerConfig(seed=-1)
    with pytest.raises(ValueError):
        OptimizerConfig(n_starts=0)

def test_fit_result():
    result = FitResult([1.0, 2.0], residual=0.5, iterations=7, converged=True,
                       covariance_estimate=[[4.0, 0.0], [0.0, 0.25]],
                       names=['a', 'b'], method='simplex', message='done')
    assert result.as_dict() == {'a': 1.0, 'b': 2.0}
    assert np.allclose(result.stderr, [2.0, 0.5])

    meta = result.metadata()
    assert meta['a_stderr'] == 2.0
    assert meta['converged'] is True

    model = DM(result.build_model().json())
    report = model['fit-result']
    assert report['method'] == 'simplex'
    assert report['iterations'] == 7
    params = report.aslist('parameter')
    assert [p['name'] for p in params] == ['a', 'b']
    assert params[1]['value'] == 2.0
    assert params[1]['stderr'] == 0.5

    with pytest.raises(ValueError):
        FitResult([1.0, 2.0], residual=0.0, iterations=0, converged=False, names=['a'])

    unnamed = FitResult([1.0], residual=0.0, iterations=0, converged=False)
    assert unnamed.as_dict() == {'x0': 1.0}
    assert unnamed.stderr is None
