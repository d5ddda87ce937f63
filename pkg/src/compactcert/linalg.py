"""Dense exact matrices, row reduction, nullspaces and row-span witnesses.

All entries of a :class:`Matrix` live in one field (``QQ`` or ``GF(p)``)
and every operation is a pure function over immutable values. Dense
storage is deliberate; the systems handled here are desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .fields import Field, Scalar


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: int
    cols: int
    entries: tuple  # row-major tuple of row tuples

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> Matrix:
        converted = tuple(tuple(field(x) for x in row) for row in rows)
        ncols = len(converted[0]) if converted else 0
        if any(len(row) != ncols for row in converted):
            raise ValueError("ragged rows")
        return cls(field, len(converted), ncols, converted)

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls.from_rows(
            field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
        )

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def transpose(self) -> Matrix:
        return Matrix(
            self.field,
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def mat_vec(self, v: Sequence[Scalar]) -> tuple:
        if len(v) != self.cols:
            raise ValueError(f"dimension mismatch: {self.cols} columns vs vector of {len(v)}")
        return tuple(
            sum((row[j] * v[j] for j in range(self.cols)), self.field.zero)
            for row in self.entries
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.field, self.entries))


@dataclass(frozen=True)
class RrefResult:
    """Reduced row echelon form plus the transformation that produced it.

    ``transform`` is a square matrix T with T @ original == matrix, so row
    combinations of the echelon form can be pulled back to combinations of
    the input rows.
    """

    matrix: Matrix
    pivots: tuple
    rank: int
    transform: Matrix


@dataclass(frozen=True)
class SpanWitness:
    """Certificate that a vector is a combination of matrix rows.

    ``coefficients`` holds only the nonzero (row index, scalar) pairs;
    applying them to the rows reproduces the target exactly.
    """

    coefficients: tuple  # ((row_index, Scalar), ...)

    def verify(self, m: Matrix, v: Sequence[Scalar]) -> bool:
        total = [m.field.zero] * m.cols
        for i, lam in self.coefficients:
            row = m.row(i)
            for j in range(m.cols):
                total[j] = total[j] + lam * row[j]
        return all(total[j] == v[j] for j in range(m.cols))


@dataclass(frozen=True)
class LinearSolution:
    particular: tuple
    nullspace: tuple  # tuple of basis vectors


def rref(m: Matrix) -> RrefResult:
    """Reduced row echelon form with recorded row transformation.

    Exact Gauss-Jordan elimination; empty matrices are allowed and have
    rank 0.
    """
    field = m.field
    work = [list(row) for row in m.entries]
    trans = [
        [field.one if i == j else field.zero for j in range(m.rows)] for i in range(m.rows)
    ]
    pivots = []
    pr = 0
    for pc in range(m.cols):
        pivot_row = None
        for r in range(pr, m.rows):
            if work[r][pc] != field.zero:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != pr:
            work[pr], work[pivot_row] = work[pivot_row], work[pr]
            trans[pr], trans[pivot_row] = trans[pivot_row], trans[pr]
        inv = field.one / work[pr][pc]
        if inv != field.one:
            work[pr] = [x * inv for x in work[pr]]
            trans[pr] = [x * inv for x in trans[pr]]
        for r in range(m.rows):
            if r != pr and work[r][pc] != field.zero:
                factor = work[r][pc]
                work[r] = [a - factor * b for a, b in zip(work[r], work[pr])]
                trans[r] = [a - factor * b for a, b in zip(trans[r], trans[pr])]
        pivots.append(pc)
        pr += 1
        if pr == m.rows:
            break
    reduced = Matrix(field, m.rows, m.cols, tuple(tuple(row) for row in work))
    transform = Matrix(field, m.rows, m.rows, tuple(tuple(row) for row in trans))
    return RrefResult(reduced, tuple(pivots), len(pivots), transform)


def solve_linear(a: Matrix, b: Sequence[Scalar]) -> Optional[LinearSolution]:
    """Solve a x = b exactly.

    Returns a particular solution together with a basis of the homogeneous
    solution space, or None when the system is inconsistent.
    """
    if a.rows != len(b):
        raise ValueError(f"dimension mismatch: {a.rows} rows vs rhs of {len(b)}")
    field = a.field
    b = [field(x) for x in b]
    augmented = Matrix(
        field,
        a.rows,
        a.cols + 1,
        tuple(tuple(a.entries[i]) + (b[i],) for i in range(a.rows)),
    )
    red = rref(augmented)
    if a.cols in red.pivots:
        return None
    pivot_cols = list(red.pivots)
    pivot_set = set(pivot_cols)
    free_cols = [j for j in range(a.cols) if j not in pivot_set]
    particular = [field.zero] * a.cols
    for r, pc in enumerate(pivot_cols):
        particular[pc] = red.matrix.entries[r][a.cols]
    basis = []
    for fc in free_cols:
        vec = [field.zero] * a.cols
        vec[fc] = field.one
        for r, pc in enumerate(pivot_cols):
            vec[pc] = -red.matrix.entries[r][fc]
        basis.append(tuple(vec))
    return LinearSolution(tuple(particular), tuple(basis))


def in_row_span(m: Matrix, v: Sequence[Scalar]) -> Optional[SpanWitness]:
    """Witness that v is a linear combination of the rows of m, if it is.

    The returned combination verifies exactly; None means v strictly
    enlarges the row space.
    """
    if len(v) != m.cols:
        raise ValueError(f"dimension mismatch: {m.cols} columns vs vector of {len(v)}")
    v = [m.field(x) for x in v]
    solution = solve_linear(m.transpose(), v)
    if solution is None:
        return None
    coeffs = tuple(
        (i, lam) for i, lam in enumerate(solution.particular) if lam != m.field.zero
    )
    return SpanWitness(coeffs)


def nullspace(m: Matrix) -> tuple:
    """Basis of the right nullspace, in the deterministic rref order."""
    field = m.field
    red = rref(m)
    pivot_cols = list(red.pivots)
    pivot_set = set(pivot_cols)
    basis = []
    for fc in (j for j in range(m.cols) if j not in pivot_set):
        vec = [field.zero] * m.cols
        vec[fc] = field.one
        for r, pc in enumerate(pivot_cols):
            vec[pc] = -red.matrix.entries[r][fc]
        basis.append(tuple(vec))
    return tuple(basis)
