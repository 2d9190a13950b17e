import numpy as np
import pytest

from rosenpencil import MatrixPolynomial, Rsmp


@pytest.fixture
def worked_example() -> Rsmp:
    """The rational problem [[l-2+1/(l-1), 1], [1, 0]] as a system quadruple.

    Its system matrix is [[l-1, 1, 0], [-1, l-2, 1], [0, 1, 0]].
    """
    a = MatrixPolynomial([[[-1.0]], [[1.0]]])
    b = [[-1.0, 0.0]]
    c = [[-1.0], [0.0]]
    d = MatrixPolynomial([[[-2.0, 1.0], [1.0, 0.0]], [[1.0, 0.0], [0.0, 0.0]]])
    return Rsmp(a, b, c, d)


@pytest.fixture
def rng():
    return np.random.default_rng(20240809)
