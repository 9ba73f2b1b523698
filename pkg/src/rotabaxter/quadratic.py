"""Symmetric bilinear forms, invariance, adjoints and the dual-numbers extension."""
from __future__ import annotations

from functools import cached_property

from .errors import DegenerateForm, DimensionMismatch, NonSymmetricForm, NotInvariantForm, SingularMatrix
from .exact_linalg import ZERO, Matrix, kernel, scalar, vector
from .lie import LieAlgebra


class BilinearForm:
    """Symmetric bilinear form given by its Gram matrix, gram[i][j] = w(e_i, e_j)."""

    def __init__(self, gram):
        gram = gram if isinstance(gram, Matrix) else Matrix(gram)
        if not gram.is_square():
            raise DimensionMismatch("Gram matrix must be square")
        if gram != gram.T:
            raise NonSymmetricForm("Gram matrix is not symmetric")
        self.gram = gram

    @property
    def dim(self) -> int:
        return self.gram.nrows

    def __call__(self, x, y):
        x = vector(x)
        y = vector(y)
        gy = self.gram @ y
        return sum((a * b for a, b in zip(x, gy) if a and b), ZERO)

    @cached_property
    def is_nondegenerate(self) -> bool:
        return self.gram.rank() == self.dim

    @cached_property
    def inverse_gram(self) -> Matrix:
        try:
            return self.gram.inverse()
        except SingularMatrix:
            raise DegenerateForm("the form is degenerate") from None

    def __add__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return BilinearForm(self.gram + other.gram)

    def __mul__(self, c):
        return BilinearForm(self.gram * scalar(c))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"BilinearForm({self.gram.tolist()})"

    def direct_sum(self, other: BilinearForm) -> BilinearForm:
        return BilinearForm(Matrix.block_diag(self.gram, other.gram))


def is_invariant(L: LieAlgebra, form: BilinearForm) -> bool:
    """w([a, b], c) == w(a, [b, c]) on all basis triples."""
    _check_dims(L, form)
    n = L.dim
    G = form.gram
    # G @ [e_a, e_b] has w([e_a, e_b], e_c) in slot c
    for a in range(n):
        for b in range(n):
            left = G @ L.table[a][b]
            for c in range(n):
                right = (G @ L.table[b][c])[a]
                if left[c] != right:
                    return False
    return True


def is_nondegenerate(form: BilinearForm) -> bool:
    return form.is_nondegenerate


def killing_form(L: LieAlgebra) -> BilinearForm:
    ads = [L.ad(L.basis_vector(i)) for i in range(L.dim)]
    n = L.dim
    return BilinearForm([[(ads[i] @ ads[j]).trace() for j in range(n)] for i in range(n)])


def adjoint(L: LieAlgebra | None, form: BilinearForm, R: Matrix) -> Matrix:
    """The operator R* with w(R x, y) = w(x, R* y), i.e. G^-1 R^T G."""
    if L is not None:
        _check_dims(L, form)
    if R.shape != form.gram.shape:
        raise DimensionMismatch("operator and form have different dimensions")
    return form.inverse_gram @ R.T @ form.gram


def dual_numbers_extension(L: LieAlgebra, chi: BilinearForm):
    """L tensor Q[t]/(t^2) with the form chi(a, b) * pi(f g), pi(f0 + f1 t) = f0 + f1.

    Basis order is (e_1..e_n, e_1 t..e_n t). Returns the algebra and form.
    """
    if not is_invariant(L, chi):
        raise NotInvariantForm("chi must be invariant")
    if not chi.is_nondegenerate:
        raise DegenerateForm("chi must be non-degenerate")
    n = L.dim

    def shift(v):
        return (ZERO,) * n + tuple(v)

    brackets = {}
    for (i, j), v in L.brackets.items():
        brackets[(i, j)] = tuple(v) + (ZERO,) * n
        brackets[(i, n + j)] = shift(v)
        brackets[(j, n + i)] = shift(-a for a in v)
    labels = list(L.labels) + [f"{a}.t" for a in L.labels]
    name = f"{L.name}[t]/t^2" if L.name else None
    L2 = LieAlgebra(2 * n, brackets, labels, name=name)
    G = chi.gram
    Z = Matrix.zeros(n)
    gram = [list(G.row(i)) + list(G.row(i)) for i in range(n)]
    gram += [list(G.row(i)) + list(Z.row(i)) for i in range(n)]
    return L2, BilinearForm(gram)


def invariant_forms_basis(L: LieAlgebra) -> list:
    """Basis of the space of symmetric invariant bilinear forms on L."""
    n = L.dim
    index = {}
    for p in range(n):
        for q in range(p, n):
            index[(p, q)] = len(index)

    def var(p, q):
        return index[(p, q) if p <= q else (q, p)]

    rows = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                # sum_k c_ab^k g(k, c) - sum_k c_bc^k g(a, k) = 0
                row = [ZERO] * len(index)
                for k, coef in enumerate(L.table[a][b]):
                    if coef:
                        row[var(k, c)] += coef
                for k, coef in enumerate(L.table[b][c]):
                    if coef:
                        row[var(a, k)] -= coef
                if any(row):
                    rows.append(row)
    sols = kernel(Matrix(rows, len(index))).vectors
    forms = []
    for s in sols:
        forms.append(BilinearForm([[s[var(p, q)] for q in range(n)] for p in range(n)]))
    return forms


def _check_dims(L, form):
    if L.dim != form.dim:
        raise DimensionMismatch(f"algebra has dim {L.dim} but form has dim {form.dim}")
