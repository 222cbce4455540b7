"""Tensor powers of a finite-dimensional space and the operator calculus on them.

A degree-n tensor power of a d-dimensional space gets the mixed-radix basis
order with the FIRST factor most significant: e_i ⊗ e_j sits at flat index
i*d + j. That makes the matrix of a ⊗ b the literal Kronecker product of
the matrices, and the placement operator id ⊗ B ⊗ id a triple Kronecker.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactla import DimensionMismatchError, Matrix, Vector


@dataclass(frozen=True)
class VectorSpaceSpec:
    """The underlying space: a dimension plus display-only basis labels."""

    dim: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if self.labels is not None and len(self.labels) != self.dim:
            raise ValueError("need one label per basis vector")

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return f"e_{i + 1}"


def flat_index(multi_index: tuple[int, ...] | list[int], d: int) -> int:
    """Mixed-radix flattening, first factor most significant.

    >>> flat_index([1, 0], 2)
    2
    >>> flat_index([1, 2, 0], 3)
    15
    """
    flat = 0
    for k in multi_index:
        if not 0 <= k < d:
            raise ValueError(f"factor index {k} out of range for d={d}")
        flat = flat * d + k
    return flat


def multi_index(flat: int, d: int, n: int) -> tuple[int, ...]:
    """Inverse of flat_index for degree n."""
    if not 0 <= flat < d ** n:
        raise ValueError(f"flat index {flat} out of range for d={d}, n={n}")
    out = [0] * n
    for k in range(n - 1, -1, -1):
        flat, out[k] = divmod(flat, d)
    return tuple(out)


@dataclass(frozen=True)
class TensorOperator:
    """An exact linear map G^⊗m -> G^⊗n, stored as its d^n x d^m matrix.

    Degree 0 is the scalar line, so maps out of degree 0 are column
    vectors: that lets a comultiplication, a multiplication and a
    distinguished vector all share one type.
    """

    space: VectorSpaceSpec
    in_degree: int
    out_degree: int
    matrix: Matrix

    def __post_init__(self):
        if self.in_degree < 0 or self.out_degree < 0:
            raise ValueError("degrees must be >= 0")
        d = self.space.dim
        want = (d ** self.out_degree, d ** self.in_degree)
        if (self.matrix.rows, self.matrix.cols) != want:
            raise DimensionMismatchError(
                f"matrix is {self.matrix.rows}x{self.matrix.cols}, "
                f"expected {want[0]}x{want[1]} for degrees "
                f"{self.in_degree}->{self.out_degree} at d={d}")

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        self._same_profile(other)
        return TensorOperator(self.space, self.in_degree, self.out_degree,
                              self.matrix + other.matrix)

    def __sub__(self, other: "TensorOperator") -> "TensorOperator":
        self._same_profile(other)
        return TensorOperator(self.space, self.in_degree, self.out_degree,
                              self.matrix - other.matrix)

    def __neg__(self) -> "TensorOperator":
        return TensorOperator(self.space, self.in_degree, self.out_degree,
                              -self.matrix)

    def scale(self, c: Fraction | int) -> "TensorOperator":
        return TensorOperator(self.space, self.in_degree, self.out_degree,
                              self.matrix.scale(c))

    def apply(self, v) -> Vector:
        return self.matrix.apply(v)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def _same_profile(self, other: "TensorOperator") -> None:
        if self.space != other.space:
            raise DimensionMismatchError("operators live over different spaces")
        if (self.in_degree, self.out_degree) != (other.in_degree, other.out_degree):
            raise DimensionMismatchError("operator degrees differ")


def identity_operator(space: VectorSpaceSpec, degree: int) -> TensorOperator:
    return TensorOperator(space, degree, degree,
                          Matrix.identity(space.dim ** degree))


def zero_operator(space: VectorSpaceSpec, in_degree: int, out_degree: int) -> TensorOperator:
    return TensorOperator(space, in_degree, out_degree,
                          Matrix.zeros(space.dim ** out_degree, space.dim ** in_degree))


def kron(a: TensorOperator, b: TensorOperator) -> TensorOperator:
    """Tensor product of operators; degrees add.

    Under the flat-index convention this is the plain Kronecker product,
    so (a ⊗ b)(u ⊗ v) = a(u) ⊗ b(v) holds on the nose.
    """
    if a.space != b.space:
        raise DimensionMismatchError("kron of operators over different spaces")
    am, bm = a.matrix, b.matrix
    rows, cols = am.rows * bm.rows, am.cols * bm.cols
    out = [[Fraction(0)] * cols for _ in range(rows)]
    for i in range(am.rows):
        arow = am.data[i]
        for j in range(am.cols):
            x = arow[j]
            if x:
                for k in range(bm.rows):
                    brow = bm.data[k]
                    orow = out[i * bm.rows + k]
                    base = j * bm.cols
                    for l in range(bm.cols):
                        if brow[l]:
                            orow[base + l] = x * brow[l]
    matrix = Matrix(rows, cols, tuple(tuple(r) for r in out))
    return TensorOperator(a.space, a.in_degree + b.in_degree,
                          a.out_degree + b.out_degree, matrix)


def compose(a: TensorOperator, b: TensorOperator) -> TensorOperator:
    """a ∘ b, i.e. apply b first; matrix product a.matrix @ b.matrix."""
    if a.space != b.space:
        raise DimensionMismatchError("compose of operators over different spaces")
    if b.out_degree != a.in_degree:
        raise DimensionMismatchError(
            f"cannot compose: inner degrees {b.out_degree} vs {a.in_degree}")
    return TensorOperator(a.space, b.in_degree, a.out_degree,
                          a.matrix @ b.matrix)


def placement(b2: TensorOperator, k: int, n: int) -> TensorOperator:
    """id_{k-1} ⊗ b2 ⊗ id_{n-k-1}: b2 acting on adjacent slots k, k+1 of G^⊗n.

    k is 1-based, 1 <= k <= n-1; b2 must be a degree 2 -> 2 operator.
    """
    if (b2.in_degree, b2.out_degree) != (2, 2):
        raise DimensionMismatchError("placement needs a degree 2->2 operator")
    if not 1 <= k <= n - 1:
        raise ValueError(f"slot k={k} out of range for n={n}")
    left = identity_operator(b2.space, k - 1)
    right = identity_operator(b2.space, n - k - 1)
    return kron(kron(left, b2), right)
