"""Exact linear algebra over the rationals.

Everything downstream (antisymmetrizers, exterior quotients, the Koszul
conditions) reduces to rank/kernel/image computations that must be exact:
a single rounding error flips a kernel dimension. Scalars are therefore
`fractions.Fraction` throughout and no float ever appears.

Conventions:
- matrices act on column vectors, ``out = M @ v``; rows index the output
  basis, columns the input basis;
- a subspace is stored by the unique reduced-echelon basis of its spanning
  set, so subspace equality is plain tuple equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?\Z")


class DimensionMismatchError(ValueError):
    """Shapes or ambient dimensions do not line up."""


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` with q > 0 and the fraction in lowest terms.

    The on-disk format is canonical, so non-canonical spellings ("2/4",
    "+1", "1/-2", "007") are rejected rather than silently normalized.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a canonical rational: {text!r}")
    value = Fraction(s)
    if format_rational(value) != s:
        raise ValueError(f"rational not in lowest terms: {text!r}")
    return value


def format_rational(x: Fraction) -> str:
    """Canonical serialization: decimal integer, or p/q in lowest terms."""
    return str(x)


def _as_fraction_rows(rows: Iterable[Iterable[Fraction | int]]) -> tuple[Vector, ...]:
    out = []
    width = None
    for row in rows:
        t = tuple(Fraction(x) for x in row)
        if width is None:
            width = len(t)
        elif len(t) != width:
            raise DimensionMismatchError("ragged rows")
        out.append(t)
    return tuple(out)


class Matrix:
    """Dense row-major matrix of exact rationals. Immutable."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: tuple[Vector, ...]):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise DimensionMismatchError(
                f"data shape does not match {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int]]) -> "Matrix":
        data = _as_fraction_rows(rows)
        if not data:
            raise DimensionMismatchError("matrix needs at least one row; use zeros()")
        return cls(len(data), len(data[0]), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        row = (_ZERO,) * cols
        return cls(rows, cols, tuple(row for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(
            tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.data, other.data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.data, other.data)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(
            tuple(-a for a in r) for r in self.data))

    def scale(self, c: Fraction | int) -> "Matrix":
        c = Fraction(c)
        return Matrix(self.rows, self.cols, tuple(
            tuple(c * a for a in r) for r in self.data))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        # skip zero entries: the braid-placement matrices are permutation-sparse
        # and this is what keeps degree-4 sums at d=4 cheap
        out = []
        for arow in self.data:
            acc = [_ZERO] * other.cols
            for k, a in enumerate(arow):
                if a:
                    brow = other.data[k]
                    for j, b in enumerate(brow):
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence[Fraction | int]) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatchError("vector length != cols")
        out = [_ZERO] * self.rows
        for i, arow in enumerate(self.data):
            acc = _ZERO
            for a, x in zip(arow, v):
                if a and x:
                    acc += a * x
            out[i] = acc
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(zip(*self.data)) if self.rows else
                      tuple(() for _ in range(self.cols)))

    def is_zero(self) -> bool:
        return all(not x for r in self.data for x in r)

    def rank(self) -> int:
        return len(rref(self)[1])

    def inverse(self) -> "Matrix | None":
        """Exact inverse, or None when the matrix is singular."""
        if self.rows != self.cols:
            return None
        n = self.rows
        work = [list(r) + [_ONE if i == j else _ZERO for j in range(n)]
                for i, r in enumerate(self.data)]
        r = 0
        for c in range(n):
            pr = next((i for i in range(r, n) if work[i][c]), None)
            if pr is None:
                return None
            work[r], work[pr] = work[pr], work[r]
            inv = _ONE / work[r][c]
            work[r] = [x * inv for x in work[r]]
            for i in range(n):
                if i != r and work[i][c]:
                    f = work[i][c]
                    prow = work[r]
                    work[i] = [x - f * y for x, y in zip(work[i], prow)]
            r += 1
        return Matrix(n, n, tuple(tuple(row[n:]) for row in work))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    def pretty(self) -> str:
        return "\n".join(" ".join(format_rational(x) for x in r) for r in self.data)

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatchError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form and its pivot columns.

    The RREF is the unique canonical representative, which is what makes
    subspace equality and every file dump reproducible byte-for-byte.
    """
    rows = [list(r) for r in m.data]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = _ONE / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return Matrix(nrows, ncols, tuple(tuple(row) for row in rows)), tuple(pivots)


class Subspace:
    """A subspace of Q^n held by its canonical reduced-echelon basis.

    Equal subspaces have identical basis tuples, so `==` is decidable
    equality of subspaces, not of presentations.
    """

    __slots__ = ("ambient_dim", "basis", "_pivots")

    def __init__(self, ambient_dim: int, vectors: Sequence[Sequence[Fraction | int]] = ()):
        self.ambient_dim = ambient_dim
        rows = _as_fraction_rows(vectors)
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionMismatchError("vector length != ambient_dim")
        if rows:
            reduced, pivots = rref(Matrix(len(rows), ambient_dim, rows))
            basis = tuple(reduced.data[i] for i in range(len(pivots)))
        else:
            basis, pivots = (), ()
        self.basis = basis
        self._pivots = pivots

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim).data)

    def contains(self, v: Sequence[Fraction | int]) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError("vector length != ambient_dim")
        residual = [Fraction(x) for x in v]
        for row, p in zip(self.basis, self._pivots):
            f = residual[p]
            if f:
                for j, y in enumerate(row):
                    if y:
                        residual[j] -= f * y
        return not any(residual)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def kernel_basis(m: Matrix) -> Subspace:
    """Null space of m, i.e. all v with M @ v = 0 exactly."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for f in free:
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for i, p in enumerate(pivots):
            v[p] = -reduced.data[i][f]
        vectors.append(v)
    return Subspace(m.cols, vectors)


def image_basis(m: Matrix) -> Subspace:
    """Column space of m, canonicalized."""
    return Subspace(m.rows, tuple(m.column(j) for j in range(m.cols)))


def subspace_leq(a: Subspace, b: Subspace) -> bool:
    """Inclusion test a <= b; raises on ambient mismatch."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(
            f"ambient dims differ: {a.ambient_dim} vs {b.ambient_dim}")
    return all(b.contains(v) for v in a.basis)
