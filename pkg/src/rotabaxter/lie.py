"""Lie algebras given by structure constants, with ideals and quotients."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

from .errors import DimensionMismatch, InvalidLieAlgebra, NotAnIdeal, NotInvariant
from .exact_linalg import (
    ZERO,
    Matrix,
    Subspace,
    kernel,
    unit_vector,
    vec_add,
    vec_is_zero,
    vector,
    zero_vector,
)


def _as_vector(value, dim):
    """Dense coordinates from a dense sequence or a sparse {k: coeff} mapping."""
    if isinstance(value, Mapping):
        v = [ZERO] * dim
        for k, c in value.items():
            if not 0 <= k < dim:
                raise DimensionMismatch(f"basis index {k} out of range for dim {dim}")
            v[k] += vector([c])[0]
        return tuple(v)
    v = vector(value)
    if len(v) != dim:
        raise DimensionMismatch(f"bracket value has length {len(v)}, expected {dim}")
    return v


def _table_bracket(table, x, y, dim):
    out = [ZERO] * dim
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = table[i]
        for j, yj in enumerate(y):
            if yj:
                c = xi * yj
                for k, a in enumerate(row[j]):
                    if a:
                        out[k] += c * a
    return tuple(out)


def _build_table(dim, brackets):
    """Full n x n table of bracket vectors from the pairs given.

    A pair (i, j) left out is filled from (j, i) by antisymmetry, or zero.
    """
    given = {}
    for (i, j), value in (brackets or {}).items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise DimensionMismatch(f"bracket pair ({i}, {j}) out of range for dim {dim}")
        given[(i, j)] = _as_vector(value, dim)
    zero = zero_vector(dim)
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if (i, j) in given:
                row.append(given[(i, j)])
            elif (j, i) in given:
                row.append(tuple(-a for a in given[(j, i)]))
            else:
                row.append(zero)
        table.append(tuple(row))
    return tuple(table)


@dataclass(frozen=True)
class ValidationReport:
    """Violations of the Lie axioms, by 0-based basis indices."""

    antisymmetry: tuple = ()
    jacobi: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.antisymmetry and not self.jacobi

    def __bool__(self):
        # truthy when something is wrong, like a non-empty list
        return not self.ok

    def __str__(self):
        if self.ok:
            return "valid"
        parts = []
        if self.antisymmetry:
            parts.append("antisymmetry fails at " + ", ".join(map(str, self.antisymmetry)))
        if self.jacobi:
            parts.append("Jacobi fails at " + ", ".join(map(str, self.jacobi)))
        return "; ".join(parts)


def _check_table(table, dim) -> ValidationReport:
    anti = []
    for i in range(dim):
        for j in range(i, dim):
            if not vec_is_zero(vec_add(table[i][j], table[j][i])):
                anti.append((i, j))
    jac = []
    basis = [unit_vector(dim, i) for i in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                t1 = _table_bracket(table, table[i][j], basis[k], dim)
                t2 = _table_bracket(table, table[j][k], basis[i], dim)
                t3 = _table_bracket(table, table[k][i], basis[j], dim)
                if any(a + b + c for a, b, c in zip(t1, t2, t3)):
                    jac.append((i, j, k))
    return ValidationReport(tuple(anti), tuple(jac))


def validate(source, dim: int | None = None) -> ValidationReport:
    """Check antisymmetry and the Jacobi identity, reporting every violation.

    ``source`` is a LieAlgebra or a mapping ``{(i, j): value}`` of raw
    structure constants together with ``dim``. Raw pairs are taken as
    given; a missing pair is filled from its transpose by antisymmetry.
    Jacobi is checked on basis triples i < j < k.
    """
    if isinstance(source, LieAlgebra):
        return _check_table(source.table, source.dim)
    if dim is None:
        raise TypeError("dim is required when validating raw structure constants")
    return _check_table(_build_table(dim, source), dim)


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q.

    ``brackets`` maps basis index pairs (i, j) to [e_i, e_j], either as a
    dense coordinate sequence or as a sparse ``{k: coeff}`` mapping. Only
    pairs with i < j need to be given. Construction fails with
    InvalidLieAlgebra unless the result is antisymmetric and satisfies
    Jacobi.
    """

    def __init__(self, dim: int, brackets=None, labels: Sequence[str] | None = None,
                 name: str | None = None):
        self.dim = dim
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(dim))
        if len(self.labels) != dim:
            raise DimensionMismatch("one label per basis element is required")
        self.name = name
        self.table = _build_table(dim, brackets)
        report = _check_table(self.table, dim)
        if not report.ok:
            raise InvalidLieAlgebra(report)

    def __repr__(self):
        return f"LieAlgebra({self.name or 'unnamed'}, dim={self.dim})"

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.table == other.table

    def __hash__(self):
        return hash((self.dim, self.table))

    @property
    def brackets(self) -> dict:
        """Non-zero brackets [e_i, e_j] for i < j."""
        return {
            (i, j): self.table[i][j]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
            if not vec_is_zero(self.table[i][j])
        }

    def basis_vector(self, i: int) -> tuple:
        return unit_vector(self.dim, i)

    def bracket(self, x, y) -> tuple:
        x = vector(x)
        y = vector(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(f"expected vectors of length {self.dim}")
        return _table_bracket(self.table, x, y, self.dim)

    @cached_property
    def _ad_basis(self):
        return tuple(
            Matrix._raw(list(zip(*self.table[i])), self.dim) for i in range(self.dim)
        )

    def ad(self, x) -> Matrix:
        """Matrix of y -> [x, y]."""
        x = vector(x)
        out = Matrix.zeros(self.dim)
        for i, c in enumerate(x):
            if c:
                out = out + self._ad_basis[i] * c
        return out

    def right_mult(self, y) -> Matrix:
        """Matrix of x -> [x, y]."""
        return -self.ad(y)

    def is_abelian(self) -> bool:
        return not self.brackets


def abelian(n: int, labels=None) -> LieAlgebra:
    return LieAlgebra(n, {}, labels, name=f"abelian({n})")


def center(L: LieAlgebra) -> Subspace:
    """{z : [z, e_i] = 0 for all i}, the kernel of the stacked maps z -> [z, e_i]."""
    if L.dim == 0:
        return Subspace.zero(0)
    blocks = [L.right_mult(L.basis_vector(i)) for i in range(L.dim)]
    return kernel(Matrix.vstack(*blocks))


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    return Subspace(L.dim, [L.table[i][j] for i in range(L.dim) for j in range(i + 1, L.dim)])


def ideal_closure(L: LieAlgebra, S: Subspace) -> Subspace:
    """Smallest ideal containing S."""
    current = S
    while True:
        new = [L.bracket(v, L.basis_vector(i)) for v in current.vectors for i in range(L.dim)]
        grown = current + Subspace(L.dim, new)
        if grown == current:
            return current
        current = grown


def is_ideal(L: LieAlgebra, S: Subspace) -> bool:
    if S.ambient_dim != L.dim:
        raise DimensionMismatch("subspace does not live in this algebra")
    return all(L.bracket(v, L.basis_vector(i)) in S for v in S.vectors for i in range(L.dim))


def bracket_space(L: LieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    """span{[a, b] : a in A, b in B}."""
    return Subspace(L.dim, [L.bracket(a, b) for a in A.vectors for b in B.vectors])


def direct_sum(L1: LieAlgebra, L2: LieAlgebra, name: str | None = None) -> LieAlgebra:
    n1, n2 = L1.dim, L2.dim
    n = n1 + n2
    labels1, labels2 = list(L1.labels), list(L2.labels)
    if set(labels1) & set(labels2):
        labels1 = [f"{a}.1" for a in labels1]
        labels2 = [f"{a}.2" for a in labels2]
    brackets = {}
    for (i, j), v in L1.brackets.items():
        brackets[(i, j)] = tuple(v) + zero_vector(n2)
    for (i, j), v in L2.brackets.items():
        brackets[(n1 + i, n1 + j)] = zero_vector(n1) + tuple(v)
    if name is None and L1.name and L2.name:
        name = f"{L1.name}+{L2.name}"
    return LieAlgebra(n, brackets, labels1 + labels2, name=name)


@dataclass(frozen=True)
class QuotientAlgebra:
    """L / I with the quotient basis taken from the non-pivot coordinates of I."""

    parent: LieAlgebra
    ideal: Subspace
    complement: tuple
    quotient: LieAlgebra
    projection: Matrix = field(repr=False)
    section: Matrix = field(repr=False)

    def project(self, v) -> tuple:
        return self.projection @ v

    def lift(self, w) -> tuple:
        return self.section @ w


def quotient(L: LieAlgebra, I: Subspace) -> QuotientAlgebra:
    if not is_ideal(L, I):
        raise NotAnIdeal("the given subspace is not an ideal")
    comp = I.complement_indices()
    m = len(comp)
    columns = []
    for j in range(L.dim):
        r = I.reduce(L.basis_vector(j))
        columns.append([r[c] for c in comp])
    projection = Matrix.from_columns(columns, m)
    section = Matrix.from_columns([L.basis_vector(c) for c in comp], L.dim)
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            brackets[(a, b)] = projection @ L.table[comp[a]][comp[b]]
    name = f"{L.name}/I" if L.name else None
    Q = LieAlgebra(m, brackets, [L.labels[c] for c in comp], name=name)
    return QuotientAlgebra(L, I, comp, Q, projection, section)


def induce_operator(Q: QuotientAlgebra, R: Matrix) -> Matrix:
    """The map induced by R on L/I; R must preserve I."""
    for v in Q.ideal.vectors:
        if R @ v not in Q.ideal:
            raise NotInvariant("operator does not preserve the ideal")
    return Q.projection @ R @ Q.section
