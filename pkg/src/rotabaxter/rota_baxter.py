"""The Rota-Baxter identity on Lie algebras.

An operator R is Rota-Baxter of weight lam when

    [R x, R y] = R([R x, y] + [x, R y] + lam [x, y])

for all x, y. Operators are :class:`Matrix` objects whose columns are the
images of the basis vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch
from .exact_linalg import Matrix, scalar, vec_add, vec_is_zero, vec_scale, vec_sub, vector
from .lie import LieAlgebra
from .quadratic import BilinearForm, adjoint
from .tensor import Tensor2, operator_of

DEFAULT_DEFECT_LIMIT = 16


@dataclass(frozen=True)
class WeightSet:
    """Set of weights: empty, finitely many values, or every scalar."""

    kind: str
    values: tuple = ()

    EMPTY = "empty"
    FINITE = "finite"
    ALL = "all"

    @classmethod
    def empty(cls) -> WeightSet:
        return cls(cls.EMPTY)

    @classmethod
    def of(cls, *values) -> WeightSet:
        vals = tuple(sorted({scalar(v) for v in values}))
        return cls(cls.FINITE, vals) if vals else cls.empty()

    @classmethod
    def everything(cls) -> WeightSet:
        return cls(cls.ALL)

    def __contains__(self, lam) -> bool:
        if self.kind == self.ALL:
            return True
        return scalar(lam) in self.values

    def is_empty(self) -> bool:
        return self.kind == self.EMPTY

    @property
    def single(self) -> Fraction | None:
        """The unique weight, if there is exactly one."""
        if self.kind == self.FINITE and len(self.values) == 1:
            return self.values[0]
        return None

    def __str__(self):
        if self.kind == self.EMPTY:
            return "no weight"
        if self.kind == self.ALL:
            return "all weights"
        return "{" + ", ".join(str(v) for v in self.values) + "}"


@dataclass(frozen=True)
class DefectReport:
    """Failing basis pairs (i, j, defect) with i < j, truncated to ``limit``."""

    pairs: tuple = ()
    total: int = 0
    limit: int = DEFAULT_DEFECT_LIMIT

    @property
    def ok(self) -> bool:
        return self.total == 0

    @property
    def truncated(self) -> bool:
        return self.total > len(self.pairs)


def _check_op(L, R):
    if R.shape != (L.dim, L.dim):
        raise DimensionMismatch(f"operator of shape {R.shape} on a {L.dim}-dimensional algebra")


def _affine_parts(L: LieAlgebra, R: Matrix, x, y):
    """Split the defect at (x, y) as A + lam * B."""
    Rx, Ry = R @ x, R @ y
    A = vec_sub(L.bracket(Rx, Ry), R @ vec_add(L.bracket(Rx, y), L.bracket(x, Ry)))
    B = tuple(-a for a in R @ L.bracket(x, y))
    return A, B


def rb_defect(L: LieAlgebra, R: Matrix, lam, x, y) -> tuple:
    """[R x, R y] - R([R x, y] + [x, R y] + lam [x, y])."""
    _check_op(L, R)
    A, B = _affine_parts(L, R, vector(x), vector(y))
    return vec_add(A, vec_scale(scalar(lam), B))


def _basis_pairs(n):
    for i in range(n):
        for j in range(i + 1, n):
            yield i, j


def is_rota_baxter(L: LieAlgebra, R: Matrix, lam, limit: int = DEFAULT_DEFECT_LIMIT):
    """Check the identity on basis pairs i < j; returns (holds, DefectReport).

    The defect is bilinear, vanishes for x = y and changes sign under
    x <-> y, so pairs i < j are enough.
    """
    _check_op(L, R)
    lam = scalar(lam)
    failing = []
    total = 0
    for i, j in _basis_pairs(L.dim):
        d = rb_defect(L, R, lam, L.basis_vector(i), L.basis_vector(j))
        if not vec_is_zero(d):
            total += 1
            if len(failing) < limit:
                failing.append((i, j, d))
    return total == 0, DefectReport(tuple(failing), total, limit)


def solve_affine_weights(parts) -> WeightSet:
    """All lam with A + lam * B = 0 for every (A, B) vector pair given."""
    parts = list(parts)
    lam = None
    for A, B in parts:
        for a, b in zip(A, B):
            if b:
                lam = -scalar(a) / scalar(b)
                break
        if lam is not None:
            break
    if lam is None:
        if all(vec_is_zero(A) for A, _ in parts):
            return WeightSet.everything()
        return WeightSet.empty()
    for A, B in parts:
        if any(a + lam * b for a, b in zip(A, B)):
            return WeightSet.empty()
    return WeightSet.of(lam)


def find_weights(L: LieAlgebra, R: Matrix) -> WeightSet:
    """Every weight for which R is Rota-Baxter.

    The identity is affine in the weight, so the answer is empty, a single
    value, or everything.
    """
    _check_op(L, R)
    return solve_affine_weights(
        _affine_parts(L, R, L.basis_vector(i), L.basis_vector(j))
        for i, j in _basis_pairs(L.dim)
    )


def theta(R: Matrix, Rstar: Matrix, alpha) -> Matrix:
    """R + R* + alpha id."""
    if R.shape != Rstar.shape:
        raise DimensionMismatch("R and R* have different shapes")
    return R + Rstar + Matrix.identity(R.nrows) * scalar(alpha)


def operators(L: LieAlgebra, form: BilinearForm, r: Tensor2):
    """(R, R*) attached to r through the form."""
    R = operator_of(L, form, r)
    return R, adjoint(L, form, R)


def prop1_identity1(L: LieAlgebra, form: BilinearForm, r: Tensor2, x, y) -> tuple:
    """[R x, R y] - R([x, R y]) + R([R* x, y]); zero whenever r solves CYBE."""
    R, Rs = operators(L, form, r)
    x, y = vector(x), vector(y)
    return vec_add(
        vec_sub(L.bracket(R @ x, R @ y), R @ L.bracket(x, R @ y)),
        R @ L.bracket(Rs @ x, y),
    )


def prop1_identity2(L: LieAlgebra, form: BilinearForm, r: Tensor2, x, y) -> tuple:
    """[R* x, R* y] + R*([x, R y]) - R*([R* x, y]); zero whenever r solves CYBE."""
    R, Rs = operators(L, form, r)
    x, y = vector(x), vector(y)
    return vec_sub(
        vec_add(L.bracket(Rs @ x, Rs @ y), Rs @ L.bracket(x, R @ y)),
        Rs @ L.bracket(Rs @ x, y),
    )


def centroid_defects(L: LieAlgebra, phi: Matrix) -> list:
    """Basis pairs (i, j) where [phi e_i, e_j] != phi [e_i, e_j]."""
    _check_op(L, phi)
    bad = []
    for i in range(L.dim):
        ei = L.basis_vector(i)
        pe = phi @ ei
        for j in range(L.dim):
            ej = L.basis_vector(j)
            if L.bracket(pe, ej) != phi @ L.bracket(ei, ej):
                bad.append((i, j))
    return bad


def centroid_check(L: LieAlgebra, phi: Matrix) -> bool:
    return not centroid_defects(L, phi)
