"""Dense linear algebra over Q.

Scalars are :class:`fractions.Fraction`, vectors are plain tuples of
Fractions, and :class:`Matrix` is an immutable row-major grid. Operators act
on coordinate columns, so ``M @ v`` is the image of ``v``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NonRationalSpectrum, SingularMatrix

__all__ = [
    "Matrix",
    "Subspace",
    "scalar",
    "format_scalar",
    "vector",
    "char_poly",
    "integer_coefficients",
    "rational_roots",
    "rational_eigen_decomposition",
    "rref",
    "solve",
    "kernel",
    "image",
]

ZERO = Fraction(0)
ONE = Fraction(1)

_SCALAR_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def scalar(x) -> Fraction:
    """Coerce ``x`` to an exact rational.

    Accepts Fractions, ints and strings of the form ``"p"`` or ``"p/q"``.
    Floats are refused: silently converting 0.1 would defeat exactness.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        if not _SCALAR_RE.match(x):
            raise ValueError(f"not an exact rational: {x!r}")
        return Fraction(x.replace(" ", ""))
    # sympy Rational, numpy ints, ...
    num = getattr(x, "numerator", None)
    den = getattr(x, "denominator", None)
    if num is not None and den is not None and not isinstance(x, float):
        num = num() if callable(num) else num
        den = den() if callable(den) else den
        return Fraction(int(num), int(den))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact scalar")


def format_scalar(q: Fraction) -> str:
    return str(q)


def vector(xs: Iterable) -> tuple:
    return tuple(scalar(x) for x in xs)


def zero_vector(n: int) -> tuple:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> tuple:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def vec_is_zero(v) -> bool:
    return not any(v)


def vec_combination(coeffs, vectors, n):
    """sum(c * v) over paired coefficients and vectors, all of length n."""
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


class Matrix:
    """Immutable matrix of Fractions."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence] = (), ncols: int | None = None):
        data = tuple(tuple(scalar(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for row in data:
            if len(row) != ncols:
                raise DimensionMismatch("ragged rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def _raw(cls, rows, ncols):
        m = cls.__new__(cls)
        m._rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m._rows)
        m.ncols = ncols
        return m

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> Matrix:
        ncols = nrows if ncols is None else ncols
        return cls._raw([[ZERO] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls._raw([unit_vector(n, i) for i in range(n)], n)

    @classmethod
    def diag(cls, entries) -> Matrix:
        entries = vector(entries)
        n = len(entries)
        return cls._raw(
            [[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)], n
        )

    @classmethod
    def from_columns(cls, columns, nrows: int | None = None) -> Matrix:
        cols = [vector(c) for c in columns]
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        if any(len(c) != nrows for c in cols):
            raise DimensionMismatch("columns of unequal length")
        return cls._raw([[c[i] for c in cols] for i in range(nrows)], len(cols))

    @classmethod
    def block_diag(cls, *blocks: Matrix) -> Matrix:
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        rows = []
        off = 0
        for b in blocks:
            for r in b._rows:
                rows.append((ZERO,) * off + r + (ZERO,) * (m - off - b.ncols))
            off += b.ncols
        return cls._raw(rows, m) if n else cls.zeros(0, m)

    @classmethod
    def vstack(cls, *blocks: Matrix) -> Matrix:
        ncols = blocks[0].ncols
        if any(b.ncols != ncols for b in blocks):
            raise DimensionMismatch("vstack: column counts differ")
        return cls._raw([r for b in blocks for r in b._rows], ncols)

    # -- access ----------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def rows(self):
        return self._rows

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self._rows[i][j]
        return self._rows[idx]

    def tolist(self):
        return [list(r) for r in self._rows]

    # -- arithmetic ------------------------------------------------------
    def _check_same(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape}")
        return None

    def __add__(self, other):
        bad = self._check_same(other)
        if bad is NotImplemented:
            return bad
        return Matrix._raw(
            [vec_add(a, b) for a, b in zip(self._rows, other._rows)], self.ncols
        )

    def __sub__(self, other):
        bad = self._check_same(other)
        if bad is NotImplemented:
            return bad
        return Matrix._raw(
            [vec_sub(a, b) for a, b in zip(self._rows, other._rows)], self.ncols
        )

    def __neg__(self):
        return Matrix._raw([tuple(-a for a in r) for r in self._rows], self.ncols)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        c = scalar(c)
        return Matrix._raw([vec_scale(c, r) for r in self._rows], self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.ncols
            out = []
            for r in self._rows:
                acc = [ZERO] * cols
                for k, a in enumerate(r):
                    if a:
                        for j, b in enumerate(other._rows[k]):
                            if b:
                                acc[j] += a * b
                out.append(acc)
            return Matrix._raw(out, cols)
        v = tuple(other)
        if len(v) != self.ncols:
            raise DimensionMismatch(f"cannot apply {self.shape} matrix to length-{len(v)} vector")
        return tuple(
            sum((a * b for a, b in zip(r, v) if a and b), ZERO) for r in self._rows
        )

    def apply(self, v) -> tuple:
        return self @ v

    def __pow__(self, k: int) -> Matrix:
        if self.nrows != self.ncols:
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    @property
    def T(self) -> Matrix:
        return Matrix._raw([self.column(j) for j in range(self.ncols)], self.nrows)

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(min(self.shape))), ZERO)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self._rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    # -- elimination -----------------------------------------------------
    def rref(self):
        return rref(self)

    def rank(self) -> int:
        return len(rref(self)[1])

    def inverse(self) -> Matrix:
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.nrows
        aug = Matrix._raw([r + unit_vector(n, i) for i, r in enumerate(self._rows)], 2 * n)
        red, piv = rref(aug)
        if piv[:n] != tuple(range(n)):
            raise SingularMatrix("matrix is singular")
        return Matrix._raw([r[n:] for r in red._rows], n)

    def det(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        rows = [list(r) for r in self._rows]
        n = self.nrows
        det = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if rows[i][c]), None)
            if p is None:
                return ZERO
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                det = -det
            piv = rows[c][c]
            det *= piv
            for i in range(c + 1, n):
                f = rows[i][c]
                if f:
                    f /= piv
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return det


def rref(A: Matrix):
    """Reduced row echelon form and the tuple of pivot columns."""
    rows = [list(r) for r in A.rows]
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != ONE:
            rows[r] = [a / piv for a in rows[r]]
        pivot_row = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [a - f * b for a, b in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return Matrix._raw(rows, ncols), tuple(pivots)


def solve(A: Matrix, b) -> tuple | None:
    """Some x with A x = b, or None when the system is inconsistent."""
    b = vector(b)
    if len(b) != A.nrows:
        raise DimensionMismatch(f"rhs length {len(b)} != {A.nrows} rows")
    n = A.ncols
    aug = Matrix._raw([r + (bi,) for r, bi in zip(A.rows, b)], n + 1)
    red, piv = rref(aug)
    if piv and piv[-1] == n:
        return None
    x = [ZERO] * n
    for i, c in enumerate(piv):
        x[c] = red[i, n]
    return tuple(x)


def kernel(A: Matrix) -> Subspace:
    n = A.ncols
    red, piv = rref(A)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for i, c in enumerate(piv):
            v[c] = -red[i, f]
        basis.append(tuple(v))
    return Subspace(n, basis)


def image(A: Matrix) -> Subspace:
    return Subspace(A.nrows, A.columns())


class Subspace:
    """Subspace of Q^n stored as a reduced row echelon basis.

    The echelon form is canonical, so ``==`` is subspace equality.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable = ()):
        vecs = [vector(v) for v in vectors]
        if any(len(v) != ambient_dim for v in vecs):
            raise DimensionMismatch(f"vectors must have length {ambient_dim}")
        red, piv = rref(Matrix._raw(vecs, ambient_dim)) if vecs else (None, ())
        self.ambient_dim = ambient_dim
        self.pivots = piv
        self.basis = Matrix._raw(red.rows[: len(piv)] if vecs else [], ambient_dim)

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n)

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, [unit_vector(n, i) for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def vectors(self):
        return self.basis.rows

    def is_zero(self) -> bool:
        return not self.pivots

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v) -> tuple:
        """Remainder of v after eliminating the pivot coordinates."""
        v = list(v)
        for row, p in zip(self.basis.rows, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return tuple(v)

    def complement_indices(self) -> tuple:
        return tuple(i for i in range(self.ambient_dim) if i not in self.pivots)

    def __contains__(self, v) -> bool:
        v = vector(v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        return vec_is_zero(self.reduce(v))

    def __le__(self, other: Subspace) -> bool:
        self._check(other)
        return all(v in other for v in self.vectors)

    def __ge__(self, other: Subspace) -> bool:
        return other <= self

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace(self.ambient_dim, list(self.vectors) + list(other.vectors))

    def __and__(self, other: Subspace) -> Subspace:
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient_dim)
        p = self.dim
        cols = list(self.vectors) + [vec_scale(-ONE, w) for w in other.vectors]
        ker = kernel(Matrix.from_columns(cols, self.ambient_dim))
        return Subspace(
            self.ambient_dim,
            [vec_combination(k[:p], self.vectors, self.ambient_dim) for k in ker.vectors],
        )

    def mapped(self, op: Matrix) -> Subspace:
        """Image of this subspace under ``op``."""
        return Subspace(op.nrows, [op @ v for v in self.vectors])

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces live in different ambient spaces")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim}, basis={self.basis.tolist()})"


def independent(parts: Sequence[Subspace]) -> bool:
    """True when the sum of ``parts`` is direct."""
    if not parts:
        return True
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    return total.dim == sum(p.dim for p in parts)


def subspace_sum(parts: Sequence[Subspace], n: int) -> Subspace:
    out = Subspace.zero(n)
    for p in parts:
        out = out + p
    return out


# -- polynomials and spectra ---------------------------------------------

def char_poly(A: Matrix) -> list:
    """Coefficients of det(tI - A), highest degree first (monic).

    Faddeev-LeVerrier recursion; the divisions by k are exact in
    characteristic 0.
    """
    if not A.is_square():
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    n = A.nrows
    coeffs = [ONE]
    M = Matrix.zeros(n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        M = A @ M + ident * coeffs[-1]
        coeffs.append(-(A @ M).trace() / k)
    return coeffs


def integer_coefficients(coeffs) -> list:
    """Scale a rational polynomial to coprime integer coefficients."""
    coeffs = [scalar(c) for c in coeffs]
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    ints = [int(c * den) for c in coeffs]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g > 1:
        ints = [a // g for a in ints]
    if ints and ints[0] < 0:
        ints = [-a for a in ints]
    return ints


def _divisors(m: int) -> list:
    m = abs(m)
    small = [d for d in range(1, isqrt(m) + 1) if m % d == 0]
    return sorted(set(small + [m // d for d in small]))


def _horner(coeffs, x):
    acc = ZERO
    for c in coeffs:
        acc = acc * x + c
    return acc


def rational_roots(coeffs) -> list:
    """Distinct rational roots by the rational root theorem, ascending."""
    ints = integer_coefficients(coeffs)
    while ints and ints[0] == 0:
        ints.pop(0)
    if len(ints) <= 1:
        return []
    roots = []
    if ints[-1] == 0:
        roots.append(ZERO)
        while ints[-1] == 0:
            ints.pop()
    if len(ints) > 1:
        lead, const = ints[0], ints[-1]
        cands = {
            Fraction(s * p, q)
            for p in _divisors(const)
            for q in _divisors(lead)
            for s in (1, -1)
        }
        roots.extend(c for c in cands if _horner(ints, c) == 0)
    return sorted(set(roots))


def rational_eigen_decomposition(A: Matrix) -> list:
    """Eigenvalues of A with their generalized eigenspaces, largest first.

    Each space is ker((A - a I)^n) with n the size of A. Raises
    NonRationalSpectrum when those spaces do not fill Q^n.
    """
    if not A.is_square():
        raise DimensionMismatch("eigen decomposition of a non-square matrix")
    n = A.nrows
    poly = char_poly(A)
    ident = Matrix.identity(n)
    out = []
    for alpha in sorted(rational_roots(poly), reverse=True):
        space = kernel((A - ident * alpha) ** n)
        out.append((alpha, space))
    total = sum(s.dim for _, s in out)
    if total < n:
        raise NonRationalSpectrum(
            f"generalized eigenspaces over Q span only {total} of {n} dimensions",
            char_poly=poly,
            found=[a for a, _ in out],
        )
    return out
