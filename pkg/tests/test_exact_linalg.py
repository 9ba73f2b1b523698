from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotabaxter.errors import DimensionMismatch, NonRationalSpectrum, SingularMatrix
from rotabaxter.exact_linalg import (
    Matrix,
    Subspace,
    char_poly,
    independent,
    integer_coefficients,
    kernel,
    rational_eigen_decomposition,
    rational_roots,
    rref,
    scalar,
    solve,
)

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


def matrices(n=None, m=None):
    dims = st.integers(1, 4)
    return (st.just(n) if n else dims).flatmap(
        lambda r: (st.just(m) if m else st.just(r)).flatmap(
            lambda c: st.lists(st.lists(rationals, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    ).map(Matrix)


def test_scalar_parsing():
    assert scalar("3/4") == F(3, 4)
    assert scalar("-2") == F(-2)
    assert scalar(5) == F(5)
    for bad in (0.5, True, "1.5", "a/b", "1/0"):
        with pytest.raises((TypeError, ValueError, ZeroDivisionError)):
            scalar(bad)


def test_matrix_basics():
    A = Matrix([[1, 2], [3, 4]])
    assert A.T == Matrix([[1, 3], [2, 4]])
    assert A @ (1, 1) == (3, 7)
    assert A.det() == -2
    assert A @ A.inverse() == Matrix.identity(2)
    assert A ** 0 == Matrix.identity(2)
    assert A ** -1 == A.inverse()
    assert Matrix.from_columns([[1, 3], [2, 4]]) == A
    with pytest.raises(SingularMatrix):
        Matrix([[1, 2], [2, 4]]).inverse()
    with pytest.raises(DimensionMismatch):
        A + Matrix.identity(3)


def test_rref_and_kernel():
    A = Matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    R, piv = rref(A)
    assert piv == (0, 1)
    K = kernel(A)
    assert K.dim == 1
    for v in K.vectors:
        assert not any(A @ v)
    assert solve(A, (6, 12, 2)) is not None
    assert solve(A, (1, 0, 0)) is None


@given(matrices())
def test_rank_nullity(A):
    assert A.rank() + kernel(A).dim == A.ncols


@given(matrices(3, 3), matrices(3, 3))
def test_det_multiplicative(A, B):
    assert (A @ B).det() == A.det() * B.det()


@given(matrices(3, 3))
def test_inverse_when_invertible(A):
    if A.det() != 0:
        assert A.inverse() @ A == Matrix.identity(3)


def test_subspace_operations():
    e = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    U = Subspace(3, [e[0], e[1]])
    V = Subspace(3, [e[1], e[2]])
    assert (U & V) == Subspace(3, [e[1]])
    assert (U + V).is_full()
    assert (2, 3, 0) in U and (0, 0, 1) not in U
    assert Subspace(3, [(1, 1, 0), (2, 2, 0)]).dim == 1
    assert not independent([U, V])
    assert independent([Subspace(3, [e[0]]), V])
    assert U.complement_indices() == (2,)


def test_char_poly_and_roots():
    A = Matrix([[2, 1], [0, 3]])
    assert char_poly(A) == [1, -5, 6]
    assert rational_roots([1, -5, 6]) == [2, 3]
    assert rational_roots([1, 0, 0]) == [0]
    assert rational_roots([1, 0, -2]) == []
    assert integer_coefficients([F(1), F(-1, 2), F(1, 3)]) == [6, -3, 2]


@given(matrices(3, 3))
def test_cayley_hamilton(A):
    c = char_poly(A)
    total = Matrix.zeros(3)
    for k, coeff in enumerate(reversed(c)):
        total = total + (A ** k) * coeff
    assert total.is_zero()


def test_eigen_decomposition_generalized():
    # Jordan block for 2 plus eigenvalue -1
    A = Matrix([[2, 1, 0], [0, 2, 0], [0, 0, -1]])
    spaces = rational_eigen_decomposition(A)
    assert [(a, S.dim) for a, S in spaces] == [(2, 2), (-1, 1)]


def test_eigen_decomposition_irrational():
    with pytest.raises(NonRationalSpectrum):
        rational_eigen_decomposition(Matrix([[0, 2], [1, 0]]))


@settings(max_examples=50)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_triangular_spectra_are_rational(diag):
    n = len(diag)
    A = Matrix([[diag[i] if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)])
    spaces = rational_eigen_decomposition(A)
    assert sum(S.dim for _, S in spaces) == n
    assert [a for a, _ in spaces] == sorted(set(diag), reverse=True)
