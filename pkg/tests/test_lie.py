import pytest

from rotabaxter import (
    LieAlgebra,
    Matrix,
    Subspace,
    abelian,
    center,
    derived_subalgebra,
    direct_sum,
    ideal_closure,
    induce_operator,
    is_ideal,
    quotient,
    validate,
)
from rotabaxter.catalog import gl2, sl2, sl2_dual_numbers
from rotabaxter.errors import DimensionMismatch, InvalidLieAlgebra, NotAnIdeal, NotInvariant

import oracles


def test_sl2_brackets():
    L = sl2()
    e, h, f = (L.basis_vector(i) for i in range(3))
    assert L.bracket(h, e) == (2, 0, 0)
    assert L.bracket(h, f) == (0, 0, -2)
    assert L.bracket(e, f) == (0, 1, 0)
    assert L.bracket(e, e) == (0, 0, 0)


@pytest.mark.parametrize("ours, theirs", [
    (sl2, oracles.sl2),
    (gl2, oracles.gl2),
    (lambda: sl2_dual_numbers()[0], oracles.dual_sl2),
])
def test_structure_constants_match_matrix_realization(ours, theirs):
    L, M = ours(), theirs()
    table = M.structure()
    for i in range(L.dim):
        for j in range(L.dim):
            assert list(L.table[i][j]) == table[i][j]


def test_invalid_constants_rejected():
    with pytest.raises(InvalidLieAlgebra):
        LieAlgebra(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {0: 1}})
    report = validate({(0, 1): {0: 1}, (1, 0): {0: 1}}, 2)
    assert report.antisymmetry == ((0, 1),)
    assert not report.ok and report


def test_bracket_dimension_check():
    with pytest.raises(DimensionMismatch):
        sl2().bracket((1, 0), (0, 1))


def test_center_and_derived():
    assert center(sl2()).is_zero()
    assert derived_subalgebra(sl2()).is_full()
    assert center(gl2()) == Subspace(4, [(1, 0, 0, 1)])
    assert derived_subalgebra(gl2()).dim == 3
    A = abelian(3)
    assert center(A).is_full() and derived_subalgebra(A).is_zero()


def test_ideals():
    L2, _ = sl2_dual_numbers()
    t_part = Subspace(6, [L2.basis_vector(i) for i in (3, 4, 5)])
    assert is_ideal(L2, t_part)
    assert not is_ideal(L2, Subspace(6, [L2.basis_vector(0)]))
    assert ideal_closure(L2, Subspace(6, [L2.basis_vector(3)])) == t_part
    assert ideal_closure(L2, Subspace(6, [L2.basis_vector(0)])).is_full()


def test_quotient_by_t_part_is_sl2():
    L2, _ = sl2_dual_numbers()
    t_part = Subspace(6, [L2.basis_vector(i) for i in (3, 4, 5)])
    Q = quotient(L2, t_part)
    assert Q.quotient.brackets == sl2().brackets
    assert Q.complement == (0, 1, 2)
    R = Matrix.diag([1, 1, 1, 0, 0, 0])
    assert induce_operator(Q, R) == Matrix.identity(3)
    with pytest.raises(NotInvariant):
        induce_operator(Q, Matrix.from_columns(
            [[0] * 6 for _ in range(3)] + [[1, 0, 0, 0, 0, 0]] * 3))
    with pytest.raises(NotAnIdeal):
        quotient(L2, Subspace(6, [L2.basis_vector(0)]))


def test_direct_sum_labels_and_validity():
    S = direct_sum(sl2(), sl2())
    assert S.labels == ("e.1", "h.1", "f.1", "e.2", "h.2", "f.2")
    assert validate(S).ok
    assert S.bracket(S.basis_vector(0), S.basis_vector(5)) == (0,) * 6


def test_ad_and_right_mult():
    L = gl2()
    x, y = (1, 2, 0, -1), (0, 1, 3, 2)
    assert L.ad(x) @ y == L.bracket(x, y)
    assert L.right_mult(y) @ x == L.bracket(x, y)
