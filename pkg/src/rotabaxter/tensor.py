"""Elements of L(x)L and L(x)L(x)L and the classical Yang-Baxter equation.

A 2-tensor is stored as its coefficient matrix: entry (p, q) is the
coefficient of e_p (x) e_q. The pair decomposition r = sum a_i (x) b_i is
never formed; every formula works on coefficients directly.
"""
from __future__ import annotations

from collections import defaultdict

from .errors import DegenerateForm, DimensionMismatch
from .exact_linalg import ZERO, Matrix, scalar, vector
from .lie import LieAlgebra
from .quadratic import BilinearForm


class Tensor2:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = coeffs if isinstance(coeffs, Matrix) else Matrix(coeffs)
        if not coeffs.is_square():
            raise DimensionMismatch("a 2-tensor needs a square coefficient grid")
        self.coeffs = coeffs

    @classmethod
    def zero(cls, dim: int) -> Tensor2:
        return cls(Matrix.zeros(dim))

    @classmethod
    def from_terms(cls, dim: int, terms) -> Tensor2:
        """Densify a sparse list of (i, j, coeff); repeated pairs add up."""
        grid = [[ZERO] * dim for _ in range(dim)]
        for i, j, c in terms:
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"term ({i}, {j}) out of range for dim {dim}")
            grid[i][j] += scalar(c)
        return cls(Matrix._raw(grid, dim))

    @classmethod
    def outer(cls, x, y) -> Tensor2:
        """x (x) y for coordinate vectors x and y."""
        x, y = vector(x), vector(y)
        if len(x) != len(y):
            raise DimensionMismatch("factors of different length")
        return cls(Matrix._raw([[a * b for b in y] for a in x], len(y)))

    @property
    def dim(self) -> int:
        return self.coeffs.nrows

    def terms(self):
        """Non-zero (i, j, coeff) triples in index order."""
        return [
            (i, j, c)
            for i, row in enumerate(self.coeffs.rows)
            for j, c in enumerate(row)
            if c
        ]

    def is_zero(self) -> bool:
        return self.coeffs.is_zero()

    def is_skew(self) -> bool:
        return self.coeffs == -self.coeffs.T

    def is_symmetric(self) -> bool:
        return self.coeffs == self.coeffs.T

    def __add__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        return Tensor2(self.coeffs + other.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        return Tensor2(self.coeffs - other.coeffs)

    def __neg__(self):
        return Tensor2(-self.coeffs)

    def __mul__(self, c):
        return Tensor2(self.coeffs * scalar(c))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Tensor2(dim={self.dim}, terms={[(i, j, str(c)) for i, j, c in self.terms()]})"

    def direct_sum(self, other: Tensor2) -> Tensor2:
        return Tensor2(Matrix.block_diag(self.coeffs, other.coeffs))


class Tensor3:
    """Element of L(x)L(x)L; only non-zero coefficients are kept."""

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms=None):
        self.dim = dim
        clean = {}
        for key, c in (terms or {}).items():
            if any(not 0 <= k < dim for k in key):
                raise DimensionMismatch(f"index {key} out of range for dim {dim}")
            c = scalar(c)
            if c:
                clean[tuple(key)] = c
        self._terms = clean

    def __getitem__(self, key):
        return self._terms.get(tuple(key), ZERO)

    def terms(self):
        return [(i, j, k, c) for (i, j, k), c in sorted(self._terms.items())]

    @property
    def coeffs(self):
        n = self.dim
        return tuple(
            tuple(tuple(self[i, j, k] for k in range(n)) for j in range(n)) for i in range(n)
        )

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    def __hash__(self):
        return hash((self.dim, frozenset(self._terms.items())))

    def __repr__(self):
        return f"Tensor3(dim={self.dim}, nonzero={len(self._terms)})"


def _check(L: LieAlgebra, t):
    if t.dim != L.dim:
        raise DimensionMismatch(f"tensor has dim {t.dim} but algebra has dim {L.dim}")


def tau(r: Tensor2) -> Tensor2:
    """The switch a (x) b -> b (x) a."""
    return Tensor2(r.coeffs.T)


def symmetric_part(r: Tensor2) -> Tensor2:
    """r + tau(r)."""
    return r + tau(r)


def ad_action2(L: LieAlgebra, t: Tensor2, y) -> Tensor2:
    """[t, y] with y acting on each tensor slot from the right."""
    _check(L, t)
    M = L.right_mult(y)
    T = t.coeffs
    return Tensor2(M @ T + T @ M.T)


def ad_action3(L: LieAlgebra, t: Tensor3, y) -> Tensor3:
    _check(L, t)
    M = L.right_mult(y)
    n = L.dim
    cols = [M.column(m) for m in range(n)]
    out = defaultdict(lambda: ZERO)
    for (i, j, k), c in t._terms.items():
        for slot, idx in enumerate((i, j, k)):
            for m, a in enumerate(cols[idx]):
                if a:
                    key = [i, j, k]
                    key[slot] = m
                    out[tuple(key)] += c * a
    return Tensor3(n, out)


def is_ad_invariant(L: LieAlgebra, t) -> bool:
    """True when [t, e_i] = 0 for every basis element."""
    act = ad_action2 if isinstance(t, Tensor2) else ad_action3
    return all(act(L, t, L.basis_vector(i)).is_zero() for i in range(L.dim))


def cybe_element(L: LieAlgebra, r: Tensor2) -> Tensor3:
    """C(r) = [r12, r13] - [r23, r12] + [r13, r23].

    With r = sum r_pq e_p (x) e_q the three pieces are
    [e_p, e_s] (x) e_q (x) e_t, -e_p (x) [e_s, e_q] (x) e_t and
    e_p (x) e_s (x) [e_q, e_t], each weighted by r_pq r_st.
    """
    _check(L, r)
    table = L.table
    terms = r.terms()
    out = defaultdict(lambda: ZERO)
    for p, q, a in terms:
        for s, t, b in terms:
            c = a * b
            for k, x in enumerate(table[p][s]):
                if x:
                    out[(k, q, t)] += c * x
            for k, x in enumerate(table[s][q]):
                if x:
                    out[(p, k, t)] -= c * x
            for k, x in enumerate(table[q][t]):
                if x:
                    out[(p, s, k)] += c * x
    return Tensor3(L.dim, out)


def is_cybe_solution(L: LieAlgebra, r: Tensor2) -> bool:
    return cybe_element(L, r).is_zero()


def cocommutator(L: LieAlgebra, r: Tensor2, a) -> Tensor2:
    """delta_r(a) = [r, a]."""
    return ad_action2(L, r, a)


def operator_of(L: LieAlgebra, form: BilinearForm, r: Tensor2) -> Matrix:
    """R(a) = sum_i w(b_i, a) a_i; as matrices R = coeffs @ gram."""
    _check(L, r)
    if form.dim != L.dim:
        raise DimensionMismatch("form and algebra dimensions differ")
    return r.coeffs @ form.gram


def tensor_of(L: LieAlgebra, form: BilinearForm, R: Matrix) -> Tensor2:
    """Inverse of operator_of: coeffs = R @ gram^-1."""
    if form.dim != L.dim or R.shape != (L.dim, L.dim):
        raise DimensionMismatch("operator, form and algebra dimensions differ")
    if not form.is_nondegenerate:
        raise DegenerateForm("tensor_of needs a non-degenerate form")
    return Tensor2(R @ form.inverse_gram)
