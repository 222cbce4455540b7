"""Line-based structure files: a dimension, a braiding, and structure maps.

The format is plain text so corpora diff cleanly and stay exact:

    # comment
    name: dual of [x,y] = y
    dimension: 2
    braiding: flip            # or: color (+ epsilon table), matrix (+ table)
    comultiplication:
    0 0
    0 1
    0 -1
    0 0

Tables are rows of canonical rationals separated by single spaces. The
comultiplication table is the d^2 x d matrix whose column j holds the
coordinates of delta(e_j); the multiplication table is d x d^2 with column
(i,j) holding m(e_i ⊗ e_j). At least one of the two maps must be present;
with both present the pair can be checked against duality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braid import (BraidingOp, color_braiding, flip_braiding,
                    matrix_braiding)
from .exactla import Matrix, format_rational, parse_rational
from .lie import (SLieAlgebra, SLieCoalgebra, comultiplication,
                  multiplication)
from .tensor import VectorSpaceSpec

BRAIDING_KINDS = ("flip", "color", "matrix")


class StructureParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class StructureFile:
    dimension: int
    braiding_kind: str
    epsilon: tuple[tuple[Fraction, ...], ...] | None = None
    braiding_matrix: Matrix | None = None
    comultiplication: Matrix | None = None
    multiplication: Matrix | None = None
    name: str | None = None
    description: str | None = None

    @property
    def space(self) -> VectorSpaceSpec:
        return VectorSpaceSpec(self.dimension)

    def braiding(self) -> BraidingOp:
        if self.braiding_kind == "flip":
            return flip_braiding(self.space)
        if self.braiding_kind == "color":
            assert self.epsilon is not None
            return color_braiding(self.space, self.epsilon)
        assert self.braiding_matrix is not None
        return matrix_braiding(self.space, self.braiding_matrix)

    def coalgebra(self, braiding: BraidingOp | None = None) -> SLieCoalgebra | None:
        if self.comultiplication is None:
            return None
        s = braiding if braiding is not None else self.braiding()
        return SLieCoalgebra(s, comultiplication(self.space, self.comultiplication))

    def algebra(self, braiding: BraidingOp | None = None) -> SLieAlgebra | None:
        if self.multiplication is None:
            return None
        s = braiding if braiding is not None else self.braiding()
        return SLieAlgebra(s, multiplication(self.space, self.multiplication))


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((i, line))
    return out


def _read_table(lines: list[tuple[int, str]], pos: int, rows: int, cols: int,
                what: str) -> tuple[list[list[Fraction]], int]:
    table = []
    for r in range(rows):
        if pos >= len(lines):
            raise StructureParseError(
                lines[-1][0] if lines else 0,
                f"{what}: expected {rows} rows, file ended after {r}")
        lineno, line = lines[pos]
        if ":" in line.split()[0]:
            raise StructureParseError(
                lineno, f"{what}: expected {rows} rows, got {r} before next section")
        tokens = line.split()
        if len(tokens) != cols:
            raise StructureParseError(
                lineno, f"{what}: expected {cols} entries per row, got {len(tokens)}")
        try:
            table.append([parse_rational(t) for t in tokens])
        except ValueError as err:
            raise StructureParseError(lineno, f"{what}: {err}") from None
        pos += 1
    return table, pos


def parse_structure(text: str) -> StructureFile:
    lines = _data_lines(text)
    pos = 0
    dimension: int | None = None
    braiding_kind: str | None = None
    epsilon = None
    braiding_matrix = None
    comult = None
    mult = None
    name = None
    description = None

    while pos < len(lines):
        lineno, line = lines[pos]
        key, _, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if ":" not in line:
            raise StructureParseError(lineno, f"expected 'key: value', got {line!r}")
        pos += 1

        if key == "name":
            name = value
        elif key == "description":
            description = value
        elif key == "dimension":
            try:
                dimension = int(value)
            except ValueError:
                raise StructureParseError(lineno, f"dimension must be an integer, got {value!r}") from None
            if dimension < 1:
                raise StructureParseError(lineno, "dimension must be >= 1")
        elif key == "braiding":
            if value not in BRAIDING_KINDS:
                raise StructureParseError(
                    lineno, f"braiding must be one of {', '.join(BRAIDING_KINDS)}; got {value!r}")
            braiding_kind = value
        elif key in ("epsilon", "matrix", "comultiplication", "multiplication"):
            if dimension is None:
                raise StructureParseError(lineno, f"{key} section before dimension")
            d = dimension
            if key == "epsilon":
                if braiding_kind != "color":
                    raise StructureParseError(lineno, "epsilon table is only valid for braiding: color")
                table, pos = _read_table(lines, pos, d, d, "epsilon")
                for i in range(d):
                    for j in range(d):
                        if table[i][j] not in (1, -1):
                            raise StructureParseError(
                                lineno, f"epsilon[{i + 1}][{j + 1}] must be 1 or -1, "
                                        f"got {format_rational(table[i][j])}")
                for i in range(d):
                    for j in range(d):
                        if table[i][j] * table[j][i] != 1:
                            raise StructureParseError(
                                lineno, f"epsilon[{i + 1}][{j + 1}]*epsilon[{j + 1}][{i + 1}] != 1; "
                                        "the braiding would not square to the identity")
                epsilon = tuple(tuple(row) for row in table)
            elif key == "matrix":
                if braiding_kind != "matrix":
                    raise StructureParseError(lineno, "matrix table is only valid for braiding: matrix")
                table, pos = _read_table(lines, pos, d * d, d * d, "matrix")
                braiding_matrix = Matrix.from_rows(table)
            elif key == "comultiplication":
                table, pos = _read_table(lines, pos, d * d, d, "comultiplication")
                comult = Matrix.from_rows(table)
            else:
                table, pos = _read_table(lines, pos, d, d * d, "multiplication")
                mult = Matrix.from_rows(table)
        else:
            raise StructureParseError(lineno, f"unknown key {key!r}")

    last = lines[-1][0] if lines else 0
    if dimension is None:
        raise StructureParseError(last, "missing dimension")
    if braiding_kind is None:
        raise StructureParseError(last, "missing braiding")
    if braiding_kind == "color" and epsilon is None:
        raise StructureParseError(last, "braiding: color needs an epsilon table")
    if braiding_kind == "matrix" and braiding_matrix is None:
        raise StructureParseError(last, "braiding: matrix needs a matrix table")
    if comult is None and mult is None:
        raise StructureParseError(last, "need a comultiplication or a multiplication (or both)")

    return StructureFile(dimension, braiding_kind, epsilon, braiding_matrix,
                         comult, mult, name, description)


def _table_lines(m: Matrix) -> list[str]:
    return [" ".join(format_rational(x) for x in row) for row in m.data]


def serialize_structure(sf: StructureFile) -> str:
    """Canonical text form; byte-stable for fixed content."""
    out: list[str] = []
    if sf.name is not None:
        out.append(f"name: {sf.name}")
    if sf.description is not None:
        out.append(f"description: {sf.description}")
    out.append(f"dimension: {sf.dimension}")
    out.append(f"braiding: {sf.braiding_kind}")
    if sf.braiding_kind == "color":
        out.append("epsilon:")
        out.extend(" ".join(format_rational(x) for x in row) for row in sf.epsilon)
    elif sf.braiding_kind == "matrix":
        out.append("matrix:")
        out.extend(_table_lines(sf.braiding_matrix))
    if sf.comultiplication is not None:
        out.append("comultiplication:")
        out.extend(_table_lines(sf.comultiplication))
    if sf.multiplication is not None:
        out.append("multiplication:")
        out.extend(_table_lines(sf.multiplication))
    return "\n".join(out) + "\n"


def dual_structure(sf: StructureFile) -> StructureFile:
    """Transpose everything: maps swap kinds, the braiding transposes.

    Applying this twice reproduces the original matrices byte-for-byte.
    """
    if sf.braiding_kind == "color":
        eps = tuple(tuple(sf.epsilon[j][i] for j in range(sf.dimension))
                    for i in range(sf.dimension))
        braiding_matrix = None
        kind = "color"
    elif sf.braiding_kind == "matrix":
        eps = None
        braiding_matrix = sf.braiding_matrix.transpose()
        kind = "matrix"
    else:
        eps = None
        braiding_matrix = None
        kind = "flip"
    name = None if sf.name is None else f"dual of {sf.name}"
    return StructureFile(
        dimension=sf.dimension,
        braiding_kind=kind,
        epsilon=eps,
        braiding_matrix=braiding_matrix,
        comultiplication=None if sf.multiplication is None else sf.multiplication.transpose(),
        multiplication=None if sf.comultiplication is None else sf.comultiplication.transpose(),
        name=name,
        description=sf.description,
    )
