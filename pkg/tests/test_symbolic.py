import pytest

from theta2 import linalg
from theta2.fields import field_new
from theta2.symbolic import SymbolicField


def test_fraction_arithmetic():
    S = SymbolicField(["a", "b"])
    a, b = S["a"], S["b"]
    assert (a + b) * (a + b) == a * a + b * b
    assert (a * b) / b == a
    assert (a / b) * b == a
    assert not (a + a)
    with pytest.raises(ZeroDivisionError):
        a / S.zero


def test_squares():
    S = SymbolicField(["a", "b"])
    a, b = S["a"], S["b"]
    assert S.is_square(a * a / (b * b))
    assert S.sqrt(a * a / b ** 4) == a / (b * b)
    assert not S.is_square(a * b)


def test_reserved_names():
    with pytest.raises(ValueError):
        SymbolicField(["X"])


def test_linalg_over_gf4(rng):
    F = field_new(2)
    for _ in range(20):
        A = [[F.random(rng) for _ in range(3)] for _ in range(3)]
        if linalg.is_invertible(A):
            Ainv = linalg.inverse(A)
            assert linalg.matmul(A, Ainv) == linalg.identity(F, 3)
            assert linalg.rank(A) == 3
        else:
            assert linalg.rank(A) < 3
            with pytest.raises(ValueError):
                linalg.inverse(A)


def test_det_multiplicative(rng):
    F = field_new(3)
    A = [[F.random(rng) for _ in range(3)] for _ in range(3)]
    B = [[F.random(rng) for _ in range(3)] for _ in range(3)]
    assert linalg.det(linalg.matmul(A, B)) == linalg.det(A) * linalg.det(B)
