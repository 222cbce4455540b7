"""Braid words, permutation lifts, braid-group representations, and the
Young antisymmetrizers built from a Yang-Baxter operator.

A braiding B on G ⊗ G that satisfies the braid equation generates a
representation of the braid group on every tensor power: the generator
sigma_k acts as the placement operator B_k. Reduced words lift a
permutation into the braid group; by Matsumoto's theorem any two reduced
words for the same permutation act identically, which is what makes the
antisymmetrizer

    Y_n(-S) = sum over permutations p of sign(p) * rho_S(lift(p))

well defined. For a symmetry (S^2 = id) this Y is n! times a projector and
its kernel cuts out the braided exterior power.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .exactla import Matrix
from .tensor import (TensorOperator, VectorSpaceSpec, compose,
                     identity_operator, multi_index, placement)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0..n-1} in one-line notation: image[i] = p(i)."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a permutation of 0..{len(self.image)-1}: {self.image}")

    @property
    def n(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        img = list(range(n))
        img[i], img[j] = img[j], img[i]
        return cls(tuple(img))

    @classmethod
    def all(cls, n: int):
        for img in itertools.permutations(range(n)):
            yield cls(img)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def compose(self, other: "Permutation") -> "Permutation":
        """self ∘ other (apply other first)."""
        return Permutation(tuple(self.image[other.image[i]] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        img = [0] * self.n
        for i, v in enumerate(self.image):
            img[v] = i
        return Permutation(tuple(img))

    def inversion_count(self) -> int:
        img = self.image
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n)
                   if img[a] > img[b])

    def sign(self) -> int:
        return -1 if self.inversion_count() % 2 else 1

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.image))


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid generators: letters are (index, exponent).

    Generator indices are 1-based, sigma_1 .. sigma_{n-1}; exponents are +/-1.
    """

    strand_count: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for i, e in self.letters:
            if not 1 <= i <= self.strand_count - 1:
                raise ValueError(f"generator index {i} out of range for "
                                 f"{self.strand_count} strands")
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")

    def __len__(self):
        return len(self.letters)


def reduced_word(p: Permutation) -> BraidWord:
    """Canonical reduced word for p: the selection-sort lift.

    Repeatedly bubble the largest misplaced value right to its home slot
    with adjacent transpositions. The word has length equal to the
    inversion count, all exponents +1, and the letter product (leftmost
    applied last, as functions) equals p.
    """
    arr = list(p.image)
    applied: list[int] = []
    for v in range(p.n - 1, 0, -1):
        i = arr.index(v)
        for j in range(i, v):
            arr[j], arr[j + 1] = arr[j + 1], arr[j]
            applied.append(j)
    letters = tuple((j + 1, 1) for j in reversed(applied))
    return BraidWord(p.n, letters)


def alternate_reduced_word(p: Permutation) -> BraidWord:
    """A second reduced word for p: peel the leftmost descent each step.

    Independent of reduced_word's choice (they differ whenever p admits
    more than one reduced word with distinct leftmost letters); used to
    exercise Matsumoto invariance of the representation.
    """
    arr = list(p.image)
    applied: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(p.n - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                applied.append(i)
                changed = True
                break
    letters = tuple((j + 1, 1) for j in reversed(applied))
    return BraidWord(p.n, letters)


def all_reduced_words(p: Permutation) -> list[BraidWord]:
    """Every reduced word for p, by descent recursion. Exponential; for tests."""
    words: list[tuple[int, ...]] = []

    def walk(img: list[int], suffix: list[int]):
        if all(v == i for i, v in enumerate(img)):
            words.append(tuple(reversed(suffix)))
            return
        for i in range(len(img) - 1):
            if img[i] > img[i + 1]:
                nxt = img.copy()
                nxt[i], nxt[i + 1] = nxt[i + 1], nxt[i]
                walk(nxt, suffix + [i])

    walk(list(p.image), [])
    return [BraidWord(p.n, tuple((j + 1, 1) for j in w)) for w in words]


def word_permutation(w: BraidWord) -> Permutation:
    """The underlying permutation s_{k1} ∘ ... ∘ s_{kl} of a braid word."""
    q = Permutation.identity(w.strand_count)
    for i, _ in w.letters:
        q = q.compose(Permutation.transposition(w.strand_count, i - 1, i))
    return q


def permutation_operator(p: Permutation, space: VectorSpaceSpec) -> TensorOperator:
    """The operator shuffling tensor factors by p: slot k moves to slot p(k).

    Multiplicative for composition, and the adjacent transposition (k, k+1)
    gives exactly the flip placed at slot k.
    """
    d = space.dim
    n = p.n
    size = d ** n
    rows = [[Fraction(0)] * size for _ in range(size)]
    for c in range(size):
        src = multi_index(c, d, n)
        tgt = [0] * n
        for k in range(n):
            tgt[p.image[k]] = src[k]
        r = 0
        for v in tgt:
            r = r * d + v
        rows[r][c] = Fraction(1)
    return TensorOperator(space, n, n, Matrix(size, size, tuple(tuple(r) for r in rows)))


class BraidingOp:
    """An endomorphism of G ⊗ G with its validity flags precomputed.

    Flags: invertible (full rank), yang_baxter (braid equation on G^⊗3),
    symmetry (squares to the identity). Only Yang-Baxter braidings generate
    a braid-group representation; only symmetries enter the Koszul checks.
    """

    def __init__(self, op: TensorOperator):
        if (op.in_degree, op.out_degree) != (2, 2):
            raise ValueError("a braiding is a degree 2->2 operator")
        self.space = op.space
        self.op = op
        self.is_invertible = op.matrix.rank() == op.space.dim ** 2
        self.is_yang_baxter = check_yang_baxter_matrix(op)
        self.is_symmetry = (op.matrix @ op.matrix) == Matrix.identity(op.space.dim ** 2)

    @cached_property
    def inverse_op(self) -> TensorOperator:
        inv = self.op.matrix.inverse()
        if inv is None:
            raise ValueError("braiding is not invertible")
        return TensorOperator(self.space, 2, 2, inv)

    def __repr__(self):
        return (f"BraidingOp(d={self.space.dim}, invertible={self.is_invertible}, "
                f"yang_baxter={self.is_yang_baxter}, symmetry={self.is_symmetry})")


def check_yang_baxter_matrix(op: TensorOperator) -> bool:
    b1 = placement(op, 1, 3)
    b2 = placement(op, 2, 3)
    lhs = b2.matrix @ b1.matrix @ b2.matrix
    rhs = b1.matrix @ b2.matrix @ b1.matrix
    return lhs == rhs


def check_yang_baxter(b: BraidingOp) -> bool:
    """(id⊗B)(B⊗id)(id⊗B) = (B⊗id)(id⊗B)(B⊗id) on G^⊗3, exactly."""
    return check_yang_baxter_matrix(b.op)


def check_symmetry(b: BraidingOp) -> bool:
    """B ∘ B = id on G ⊗ G, exactly."""
    return b.is_symmetry


def flip_braiding(space: VectorSpaceSpec) -> BraidingOp:
    """The flip u ⊗ v -> v ⊗ u."""
    tau = permutation_operator(Permutation.transposition(2, 0, 1), space)
    return BraidingOp(tau)


def color_braiding(space: VectorSpaceSpec,
                   eps: tuple[tuple[Fraction, ...], ...]) -> BraidingOp:
    """Sign-twisted flip: e_i ⊗ e_j -> eps[i][j] * e_j ⊗ e_i.

    With eps[i][j] * eps[j][i] = 1 this squares to the identity; the super
    sign pattern eps[i][j] = (-1)^(|i||j|) is the motivating example.
    """
    d = space.dim
    if len(eps) != d or any(len(r) != d for r in eps):
        raise ValueError("eps must be a d x d table")
    rows = [[Fraction(0)] * (d * d) for _ in range(d * d)]
    for i in range(d):
        for j in range(d):
            rows[j * d + i][i * d + j] = Fraction(eps[i][j])
    op = TensorOperator(space, 2, 2, Matrix(d * d, d * d, tuple(tuple(r) for r in rows)))
    return BraidingOp(op)


def matrix_braiding(space: VectorSpaceSpec, matrix: Matrix) -> BraidingOp:
    return BraidingOp(TensorOperator(space, 2, 2, matrix))


def super_sign_table(d: int) -> tuple[tuple[Fraction, ...], ...]:
    """The canonical sign table used by the 'color' structure-file family:
    generators split into an even block then an odd block, with
    eps[i][j] = -1 exactly when both are odd. At d=2 this is (even, odd)."""
    degree = [0 if i < (d + 1) // 2 else 1 for i in range(d)]
    return tuple(tuple(Fraction(-1 if degree[i] and degree[j] else 1)
                       for j in range(d)) for i in range(d))


def rho(b: BraidingOp, w: BraidWord) -> TensorOperator:
    """The braid-group representation: sigma_k acts as the placement B_k.

    The word maps to the product in word order (leftmost letter leftmost in
    the matrix product, hence applied last to vectors). Requires a
    Yang-Baxter braiding; negative exponents additionally require
    invertibility.
    """
    if not b.is_yang_baxter:
        raise ValueError("braiding does not satisfy the braid equation; "
                         "the representation is not well defined")
    n = w.strand_count
    result = identity_operator(b.space, n)
    for i, e in w.letters:
        if e == 1:
            factor = placement(b.op, i, n)
        else:
            if not b.is_invertible:
                raise ValueError("negative exponent needs an invertible braiding")
            factor = placement(b.inverse_op, i, n)
        result = compose(result, factor)
    return result


def _rho_table(b: BraidingOp, n: int) -> dict[tuple[int, ...], Matrix]:
    """rho(lift(p)) for every permutation p of n letters.

    Walks the weak order: each permutation of length l+1 is s_k ∘ p with p
    of length l, and its matrix is B_k @ M_p. Each matrix is therefore the
    image of one concrete reduced word; Matsumoto invariance (tested
    separately) makes the word choice immaterial.
    """
    d = b.space.dim
    b_k = {k: placement(b.op, k, n).matrix for k in range(1, n)}
    table: dict[tuple[int, ...], Matrix] = {
        tuple(range(n)): Matrix.identity(d ** n)}
    frontier = [Permutation.identity(n)]
    while frontier:
        nxt: list[Permutation] = []
        for p in frontier:
            mp = table[p.image]
            pos = {v: i for i, v in enumerate(p.image)}
            for k in range(1, n):
                # left-multiplying by s_k swaps the values k-1, k; it adds an
                # inversion iff value k-1 currently sits left of value k
                if pos[k - 1] < pos[k]:
                    img = tuple(k - 1 if v == k else k if v == k - 1 else v
                                for v in p.image)
                    if img not in table:
                        table[img] = b_k[k] @ mp
                        nxt.append(Permutation(img))
        frontier = nxt
    return table


def young_antisymmetrizer(b: BraidingOp, n: int, signed: bool = True) -> TensorOperator:
    """Sum over all permutations p of rho(lift(p)), optionally sign-weighted.

    signed=True is the Woronowicz form Y_n(-S) used by every downstream
    construction; signed=False is the unsigned sum Y_n(B). n = 1 gives the
    identity.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    if not b.is_yang_baxter:
        raise ValueError("antisymmetrizer needs a Yang-Baxter braiding")
    d = b.space.dim
    total = Matrix.zeros(d ** n, d ** n)
    for img, mat in _rho_table(b, n).items():
        if signed and Permutation(img).sign() < 0:
            total = total - mat
        else:
            total = total + mat
    return TensorOperator(b.space, n, n, total)
