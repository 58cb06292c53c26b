import pytest
import numpy as np
from transmonfield.tools import central_derivative, numderivative

def test_numderivative():
    x = np.linspace(0.0, 2.0, 21)
    y = 3.0 * x**2

    newx, newy = numderivative(x, y)
    assert len(newx) == 20
    assert np.allclose(newx, x[:-1] + 0.05)
    assert np.allclose(newy, 6.0 * newx)

    newx, newy = numderivative(x, y, n=2)
    assert len(newy) == 19
    assert np.allclose(newy, 6.0)

    newx, newy = numderivative(x, y, n=0)
    assert np.array_equal(newy, y)

    with pytest.raises(ValueError):
        numderivative(x, y, n=-1)
    with pytest.raises(ValueError):
        numderivative([1.0], [1.0])

def test_central_derivative():
    assert np.isclose(central_derivative(np.sin, 0.3, 1e-4), np.cos(0.3), atol=1e-8)
    assert np.isclose(central_derivative(lambda x: x**2, 2.0, 0.5), 4.0)
    with pytest.raises(ValueError):
        central_derivative(np.sin, 0.0, 0.0)
