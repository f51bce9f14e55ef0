"""Dense matrices of exact field scalars.

Values are immutable: every operation returns a fresh matrix, and all
arithmetic is exact (no tolerances anywhere).  Size-0 matrices are legal
and behave as empty blocks.  Gaussian elimination uses first-nonzero
pivoting; pivot-magnitude heuristics are meaningless in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    ParseError,
    SingularMatrixError,
)
from .fields import Field, Scalar


@dataclass(frozen=True)
class Matrix:
    """A rows x cols matrix over ``field``, entries stored row-major."""

    field: Field
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    # -- construction -------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = []
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatchError("ragged rows")
            flat.extend(field.coerce(x) for x in row)
        return cls(field, nrows, ncols, tuple(flat))

    @classmethod
    def from_columns(cls, field: Field, nrows: int, columns: Sequence["Matrix"]) -> "Matrix":
        """Assemble a matrix whose columns are the given nrows x 1 matrices."""
        for c in columns:
            if c.rows != nrows or c.cols != 1:
                raise DimensionMismatchError("columns must be nrows x 1")
            if c.field != field:
                raise FieldMismatchError("column over a different field")
        flat = []
        for i in range(nrows):
            for c in columns:
                flat.append(c.entries[i])
        return cls(field, nrows, len(columns), tuple(flat))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(
            field, n, n,
            tuple(one if i == j else zero for i in range(n) for j in range(n)),
        )

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    # -- access --------------------------------------------------------

    def at(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row_list(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list:
        return [self.row_list(i) for i in range(self.rows)]

    def column(self, j: int) -> "Matrix":
        return Matrix(self.field, self.rows, 1,
                      tuple(self.entries[i * self.cols + j] for i in range(self.rows)))

    def submatrix(self, r0: int, c0: int, nrows: int, ncols: int) -> "Matrix":
        ent = tuple(self.entries[(r0 + i) * self.cols + (c0 + j)]
                    for i in range(nrows) for j in range(ncols))
        return Matrix(self.field, nrows, ncols, ent)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic ----------------------------------------------------

    def _check_same_shape(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatchError("operands over different fields")
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatchError(
                f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        m = self.field.modulus
        ent = tuple(a + b for a, b in zip(self.entries, other.entries))
        if m is not None:
            ent = tuple(x % m for x in ent)
        return Matrix(self.field, self.rows, self.cols, ent)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        m = self.field.modulus
        ent = tuple(a - b for a, b in zip(self.entries, other.entries))
        if m is not None:
            ent = tuple(x % m for x in ent)
        return Matrix(self.field, self.rows, self.cols, ent)

    def __neg__(self) -> "Matrix":
        m = self.field.modulus
        ent = tuple(-a for a in self.entries)
        if m is not None:
            ent = tuple(x % m for x in ent)
        return Matrix(self.field, self.rows, self.cols, ent)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field:
            raise FieldMismatchError("operands over different fields")
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        mod = self.field.modulus
        out = []
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for j in range(m):
                s = sum(arow[t] * b[t * m + j] for t in range(k))
                out.append(s % mod if mod is not None else s)
        if not out:
            return Matrix.zeros(self.field, n, m)
        return Matrix(self.field, n, m, tuple(out))

    def scale(self, c: Scalar) -> "Matrix":
        mod = self.field.modulus
        ent = tuple(c * a for a in self.entries)
        if mod is not None:
            ent = tuple(x % mod for x in ent)
        return Matrix(self.field, self.rows, self.cols, ent)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field, self.cols, self.rows,
            tuple(self.entries[i * self.cols + j]
                  for j in range(self.cols) for i in range(self.rows)),
        )

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        zero = self.field.zero
        return all(x == zero for x in self.entries)

    def is_identity(self) -> bool:
        return self.is_square and self == Matrix.identity(self.field, self.rows)

    def is_idempotent(self) -> bool:
        return self.is_square and self * self == self

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.rows

    # -- elimination-backed operations ----------------------------------

    def rank(self) -> int:
        _, pivots, _ = _row_reduce(self.to_rows(), self.field)
        return len(pivots)

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatchError("inverse needs a square matrix")
        n = self.rows
        rref, pivots, transform = _row_reduce(self.to_rows(), self.field, track=True)
        if len(pivots) < n:
            raise SingularMatrixError(f"matrix of rank {len(pivots)} < {n}")
        return Matrix.from_rows(self.field, transform)

    def __str__(self) -> str:
        return format_matrix(self)


def _row_reduce(rows, field, track=False):
    """Reduce to RREF in place.

    Returns ``(rows, pivot_cols, transform)`` where ``transform`` (when
    ``track``) is the square matrix of accumulated row operations, so
    ``transform * input = rref``.  First nonzero entry in each column is
    the pivot.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    mod = field.modulus
    transform = None
    if track:
        transform = [[field.one if i == j else field.zero for j in range(nrows)]
                     for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != field.zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            if track:
                transform[r], transform[pivot_row] = transform[pivot_row], transform[r]
        inv = field.inv(rows[r][c])
        if rows[r][c] != field.one:
            rows[r] = [x * inv % mod if mod is not None else x * inv for x in rows[r]]
            if track:
                transform[r] = [x * inv % mod if mod is not None else x * inv
                                for x in transform[r]]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f == field.zero:
                continue
            if mod is not None:
                rows[i] = [(x - f * y) % mod for x, y in zip(rows[i], rows[r])]
                if track:
                    transform[i] = [(x - f * y) % mod
                                    for x, y in zip(transform[i], transform[r])]
            else:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
                if track:
                    transform[i] = [x - f * y
                                    for x, y in zip(transform[i], transform[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots, transform


def kernel_and_image(a: Matrix) -> tuple[list[Matrix], list[Matrix]]:
    """Exact bases of the kernel and of the column space of ``a``.

    Kernel vectors come from the free columns of the RREF; image vectors
    are the pivot columns of ``a`` itself, so they are actual columns of
    the input.  ``len(kernel) + len(image) == a.cols``.
    """
    field = a.field
    rref, pivots, _ = _row_reduce(a.to_rows(), field)
    pivot_set = set(pivots)
    mod = field.modulus
    kernel = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        v = [field.zero] * a.cols
        v[free] = field.one
        for r, c in enumerate(pivots):
            x = -rref[r][free]
            v[c] = x % mod if mod is not None else x
        kernel.append(Matrix(field, a.cols, 1, tuple(v)))
    image = [a.column(c) for c in pivots]
    return kernel, image


def block_diag(blocks: Sequence[Matrix], field: Field | None = None) -> Matrix:
    """Block-diagonal assembly; size-0 blocks are skipped."""
    if field is None:
        if not blocks:
            raise DimensionMismatchError("empty block list needs an explicit field")
        field = blocks[0].field
    total = 0
    for b in blocks:
        if not b.is_square:
            raise DimensionMismatchError("blocks must be square")
        if b.field != field:
            raise FieldMismatchError("blocks over different fields")
        total += b.rows
    rows = [[field.zero] * total for _ in range(total)]
    off = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                rows[off + i][off + j] = b.at(i, j)
        off += b.rows
    return Matrix.from_rows(field, rows) if total else Matrix.zeros(field, 0, 0)


def reversal_matrix(field: Field, d: int) -> Matrix:
    """The d x d anti-diagonal permutation matrix; its own inverse."""
    if d < 1:
        raise DimensionMismatchError("reversal matrix needs size >= 1")
    one, zero = field.one, field.zero
    return Matrix(
        field, d, d,
        tuple(one if i + j == d - 1 else zero for i in range(d) for j in range(d)),
    )


def conjugate(a: Matrix, r: Matrix) -> Matrix:
    """Return ``r * a * r**-1``."""
    if not (a.is_square and r.is_square) or a.rows != r.rows:
        raise DimensionMismatchError("conjugation needs square matrices of equal size")
    return r * a * r.inverse()


def rank_normal_decomposition(b: Matrix) -> tuple[Matrix, int, Matrix]:
    """Invertible Q, Q' and the rank r with ``b = Q * Diag(I_r, 0) * Q'``.

    Q is the inverse of the accumulated row transform, Q' the inverse of
    the accumulated column transform of a full Gauss-Jordan reduction.
    """
    if not b.is_square:
        raise DimensionMismatchError("rank normal form needs a square matrix")
    field = b.field
    n = b.rows
    work, pivots, transform = _row_reduce(b.to_rows(), field, track=True)
    r = len(pivots)
    colop = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]

    def swap_cols(rows, x, y):
        for row in rows:
            row[x], row[y] = row[y], row[x]

    for idx, c in enumerate(pivots):
        if c != idx:
            swap_cols(work, idx, c)
            swap_cols(colop, idx, c)
    mod = field.modulus
    for j in range(r, n):
        for i in range(r):
            f = work[i][j]
            if f == field.zero:
                continue
            for rows in (work, colop):
                for row in rows:
                    x = row[j] - f * row[i]
                    row[j] = x % mod if mod is not None else x
    q = Matrix.from_rows(field, transform).inverse() if n else Matrix.zeros(field, 0, 0)
    qp = Matrix.from_rows(field, colop).inverse() if n else Matrix.zeros(field, 0, 0)
    return q, r, qp


def jordan_block(field: Field, size: int) -> Matrix:
    """The nilpotent upper-shift matrix of the given size."""
    one, zero = field.one, field.zero
    return Matrix(
        field, size, size,
        tuple(one if j == i + 1 else zero for i in range(size) for j in range(size)),
    )


# -- text format -----------------------------------------------------
#
# First line: "<rows> <cols>".  Then one line per row, entries separated
# by whitespace.  Rationals as "a" or "a/b" with b > 0; prime-field
# entries as canonical residues.  The field is chosen by the caller, not
# recorded in the file.

def parse_matrix(text: str, field: Field) -> Matrix:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"bad size header {lines[0]!r}")
    try:
        nrows, ncols = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"bad size header {lines[0]!r}") from None
    if nrows < 0 or ncols < 0:
        raise ParseError("matrix dimensions must be nonnegative")
    if len(lines) != 1 + nrows:
        raise ParseError(f"expected {nrows} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        tokens = ln.split()
        if len(tokens) != ncols:
            raise ParseError(f"expected {ncols} entries in row {ln!r}")
        rows.append([field.parse(tok) for tok in tokens])
    if nrows == 0:
        return Matrix.zeros(field, 0, ncols)
    return Matrix.from_rows(field, rows)


def format_matrix(m: Matrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    for i in range(m.rows):
        lines.append(" ".join(m.field.format(x) for x in m.row_list(i)))
    return "\n".join(lines)
