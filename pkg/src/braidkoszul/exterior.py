"""Braided exterior powers as quotients G^⊗n / ker Y_n(-S).

A level holds the kernel of the degree-n antisymmetrizer together with an
explicit projection/section pair for the quotient, and maps between tensor
powers descend to the quotients exactly when they preserve the kernels.
That existence question is mathematical content, not a numerical
inconvenience, so a failed induction raises KernelNotPreservedError with a
concrete witness vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braid import BraidingOp, young_antisymmetrizer
from .exactla import Matrix, Subspace, Vector, kernel_basis
from .tensor import TensorOperator


class KernelNotPreservedError(Exception):
    """f does not map ker Y_m(-S) into ker Y_n(-S); no factor map exists."""

    def __init__(self, witness: Vector, image: Vector):
        self.witness = witness
        self.image = image
        super().__init__(
            "map does not preserve the antisymmetrizer kernel; "
            f"witness kernel vector {witness} maps to {image}")


@dataclass(frozen=True)
class ExteriorLevel:
    """Degree-n layer of the braided exterior algebra of a symmetry S."""

    braiding: BraidingOp
    degree: int
    antisymmetrizer: TensorOperator
    kernel: Subspace
    quotient_dim: int
    projection: Matrix   # d^n -> quotient_dim
    section: Matrix      # quotient_dim -> d^n, standard-basis representatives

    @property
    def space(self):
        return self.braiding.space

    def project(self, v) -> Vector:
        return self.projection.apply(v)


@dataclass(frozen=True)
class FactorMap:
    """A map induced on quotient coordinates; commutes with the projections."""

    source: ExteriorLevel
    target: ExteriorLevel
    matrix: Matrix


def build_level(s: BraidingOp, n: int) -> ExteriorLevel:
    """Construct the degree-n exterior level of a symmetry.

    Quotient coordinates are the non-pivot coordinates of the kernel's
    echelon basis: the corresponding standard basis vectors form a
    complement of the kernel, which makes the projection/section pair
    canonical and reproducible across runs.
    """
    if not s.is_symmetry:
        raise ValueError("exterior levels need a symmetry (S^2 = id)")
    y = young_antisymmetrizer(s, n, signed=True)
    ker = kernel_basis(y.matrix)
    ambient = y.matrix.cols
    pivot_set = set(ker.pivots)
    coords = [c for c in range(ambient) if c not in pivot_set]
    qdim = len(coords)
    assert qdim == ambient - ker.dim
    # rank of Y equals the quotient dimension: the image realization of the
    # exterior power (valid in characteristic 0) has the same size
    assert ambient - ker.dim == y.matrix.rank()

    zero, one = Fraction(0), Fraction(1)
    proj_rows = []
    for q in coords:
        row = [zero] * ambient
        row[q] = one
        for krow, p in zip(ker.basis, ker.pivots):
            if krow[q]:
                row[p] = -krow[q]
        proj_rows.append(tuple(row))
    projection = Matrix(qdim, ambient, tuple(proj_rows))

    sec_rows = [[zero] * qdim for _ in range(ambient)]
    for r, q in enumerate(coords):
        sec_rows[q][r] = one
    section = Matrix(ambient, qdim, tuple(tuple(r) for r in sec_rows))

    assert (projection @ section) == Matrix.identity(qdim)
    for v in ker.basis:
        if any(projection.apply(v)):
            raise AssertionError("projection does not kill the kernel")

    return ExteriorLevel(s, n, y, ker, qdim, projection, section)


def induce(f: TensorOperator, src: ExteriorLevel, tgt: ExteriorLevel) -> FactorMap:
    """Descend f: G^⊗m -> G^⊗n to the exterior quotients.

    Checks kernel preservation vector by vector and raises
    KernelNotPreservedError with the offending kernel vector otherwise.
    """
    if f.in_degree != src.degree or f.out_degree != tgt.degree:
        raise ValueError(
            f"degrees {f.in_degree}->{f.out_degree} do not match levels "
            f"{src.degree}->{tgt.degree}")
    if src.braiding is not tgt.braiding and src.braiding.op != tgt.braiding.op:
        raise ValueError("levels were built from different braidings")
    for v in src.kernel.basis:
        w = f.apply(v)
        if not tgt.kernel.contains(w):
            raise KernelNotPreservedError(v, w)
    matrix = tgt.projection @ f.matrix @ src.section
    # uniqueness: agreeing on a complement and killing the kernel pins the map
    assert (matrix @ src.projection) == (tgt.projection @ f.matrix)
    return FactorMap(src, tgt, matrix)
