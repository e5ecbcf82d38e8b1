"""Dense exact matrix algebra over a FieldSpec.

Matrices are immutable values: every operation returns a fresh Matrix and
any matrix can be read concurrently. Entries are stored row-major as int
codes of the attached field. Sizes here are desk scale (a few hundred at
most), so copying is cheap and no sparse or bit-packed formats are used.

Rank, inversion and the rank decomposition all run through one Gauss-
Jordan kernel (`_row_reduce`) so there is a single audited elimination
path. Pivoting picks the first nonzero entry scanning down each column,
columns left to right; exact arithmetic needs no magnitude-based pivot
strategy, and the fixed scan order makes every result bit-reproducible.
"""

from __future__ import annotations

from .field import PRIME, FieldSpec


class FieldMismatchError(ValueError):
    """Operands live in different fields."""


class SingularMatrixError(ValueError):
    """Square matrix has no inverse."""


def _row_reduce(rows: list[list[int]], field: FieldSpec,
                mirror: list[list[int]] | None = None) -> list[int]:
    """Reduce `rows` to reduced row-echelon form in place.

    The identical row operations (swap, scale, subtract) are applied
    full-width to `mirror` when given, so a caller that passes the
    identity receives the accumulated left transform. Entries left of a
    pivot column are already zero in the pivot row, so updates to `rows`
    start at the pivot column.

    Returns the pivot column indices; their count is the rank.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0

    if field.kind == PRIME:
        p = field.characteristic
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if rows[i][c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                rows[r], rows[piv] = rows[piv], rows[r]
                if mirror is not None:
                    mirror[r], mirror[piv] = mirror[piv], mirror[r]
            prow = rows[r]
            v = prow[c]
            if v != 1:
                s = pow(v, p - 2, p)
                prow[c:] = [x * s % p for x in prow[c:]]
                if mirror is not None:
                    mirror[r] = [x * s % p for x in mirror[r]]
            mrow = mirror[r] if mirror is not None else None
            ptail = prow[c:]
            for i in range(nrows):
                if i == r:
                    continue
                f = rows[i][c]
                if f:
                    row = rows[i]
                    row[c:] = [(x - f * y) % p for x, y in zip(row[c:], ptail)]
                    if mirror is not None:
                        mirror[i] = [(x - f * y) % p
                                     for x, y in zip(mirror[i], mrow)]
            pivots.append(c)
            r += 1
            if r == nrows:
                break

    elif field.order == 2:
        # GF(2): the only nonzero factor is 1, so row updates are XORs.
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if rows[i][c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                rows[r], rows[piv] = rows[piv], rows[r]
                if mirror is not None:
                    mirror[r], mirror[piv] = mirror[piv], mirror[r]
            prow = rows[r]
            mrow = mirror[r] if mirror is not None else None
            ptail = prow[c:]
            for i in range(nrows):
                if i != r and rows[i][c]:
                    row = rows[i]
                    row[c:] = [x ^ y for x, y in zip(row[c:], ptail)]
                    if mirror is not None:
                        mirror[i] = [x ^ y for x, y in zip(mirror[i], mrow)]
            pivots.append(c)
            r += 1
            if r == nrows:
                break

    else:
        exp, log = field._mul_tables()
        qm1 = field.order - 1
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if rows[i][c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                rows[r], rows[piv] = rows[piv], rows[r]
                if mirror is not None:
                    mirror[r], mirror[piv] = mirror[piv], mirror[r]
            prow = rows[r]
            v = prow[c]
            if v != 1:
                ls = qm1 - log[v]  # log of 1/v
                prow[c:] = [exp[ls + log[x]] if x else 0 for x in prow[c:]]
                if mirror is not None:
                    mirror[r] = [exp[ls + log[x]] if x else 0
                                 for x in mirror[r]]
            mrow = mirror[r] if mirror is not None else None
            ptail = prow[c:]
            for i in range(nrows):
                if i == r:
                    continue
                f = rows[i][c]
                if f:
                    lf = log[f]
                    row = rows[i]
                    row[c:] = [x ^ exp[lf + log[y]] if y else x
                               for x, y in zip(row[c:], ptail)]
                    if mirror is not None:
                        mirror[i] = [x ^ exp[lf + log[y]] if y else x
                                     for x, y in zip(mirror[i], mrow)]
            pivots.append(c)
            r += 1
            if r == nrows:
                break

    return pivots


class Matrix:
    """Immutable dense matrix of field element codes."""

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field: FieldSpec, rows):
        data = tuple(tuple(row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and column")
        w = len(data[0])
        for row in data:
            if len(row) != w:
                raise ValueError("rows have inconsistent lengths")
            for code in row:
                field.validate_code(code)
        self.field = field
        self.nrows = len(data)
        self.ncols = w
        self._rows = data

    @classmethod
    def _new(cls, field, rows_tuple):
        # Internal fast path: trusts that codes are already canonical.
        m = object.__new__(cls)
        m.field = field
        m._rows = rows_tuple
        m.nrows = len(rows_tuple)
        m.ncols = len(rows_tuple[0])
        return m

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        if n < 1:
            raise ValueError("size must be positive")
        return cls._new(field, tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        if nrows < 1 or ncols < 1:
            raise ValueError("dimensions must be positive")
        zero_row = (0,) * ncols
        return cls._new(field, (zero_row,) * nrows)

    @classmethod
    def from_flat(cls, field: FieldSpec, nrows: int, ncols: int, codes) -> "Matrix":
        """Build from a row-major flat sequence of codes."""
        flat = list(codes)
        if len(flat) != nrows * ncols:
            raise ValueError(
                f"expected {nrows * ncols} entries, got {len(flat)}")
        return cls(field, (flat[i * ncols:(i + 1) * ncols] for i in range(nrows)))

    # ------------------------------------------------------------------
    # basics
    # ------------------------------------------------------------------
    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self._rows]

    def flat(self) -> list[int]:
        """Row-major list of entry codes."""
        return [x for row in self._rows for x in row]

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix)
                and self.field == other.field
                and self._rows == other._rows)

    def __hash__(self):
        return hash((self.field, self._rows))

    def __repr__(self):
        return f"<Matrix {self.nrows}x{self.ncols} over {self.field}>"

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self._rows)

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    def _require_same_field(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatchError(
                f"operands over {self.field} and {other.field}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._require_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError(
                f"cannot add {self.nrows}x{self.ncols} and "
                f"{other.nrows}x{other.ncols}")
        f = self.field
        if f.kind == PRIME:
            p = f.characteristic
            rows = tuple(tuple((x + y) % p for x, y in zip(ra, rb))
                         for ra, rb in zip(self._rows, other._rows))
        else:
            rows = tuple(tuple(x ^ y for x, y in zip(ra, rb))
                         for ra, rb in zip(self._rows, other._rows))
        return Matrix._new(f, rows)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._require_same_field(other)
        if self.ncols != other.nrows:
            raise ValueError(
                f"cannot multiply {self.nrows}x{self.ncols} by "
                f"{other.nrows}x{other.ncols}")
        f = self.field
        brows = other._rows
        out = []
        if f.kind == PRIME:
            p = f.characteristic
            bcols = list(zip(*brows))
            for arow in self._rows:
                out.append(tuple(sum(x * y for x, y in zip(arow, bcol)) % p
                                 for bcol in bcols))
        elif f.order == 2:
            width = other.ncols
            for arow in self._rows:
                acc = [0] * width
                for k, a in enumerate(arow):
                    if a:
                        acc = [x ^ y for x, y in zip(acc, brows[k])]
                out.append(tuple(acc))
        else:
            exp, log = f._mul_tables()
            width = other.ncols
            for arow in self._rows:
                acc = [0] * width
                for k, a in enumerate(arow):
                    if a:
                        la = log[a]
                        acc = [x ^ exp[la + log[y]] if y else x
                               for x, y in zip(acc, brows[k])]
                out.append(tuple(acc))
        return Matrix._new(f, tuple(out))

    def transpose(self) -> "Matrix":
        return Matrix._new(self.field, tuple(zip(*self._rows)))

    def rank(self) -> int:
        rows = [list(r) for r in self._rows]
        return len(_row_reduce(rows, self.field))

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse; raises SingularMatrixError if none exists."""
        if not self.is_square:
            raise ValueError(f"cannot invert {self.nrows}x{self.ncols} matrix")
        n = self.nrows
        rows = [list(r) for r in self._rows]
        mirror = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        if len(_row_reduce(rows, self.field, mirror)) != n:
            raise SingularMatrixError(
                f"{n}x{n} matrix over {self.field} is singular")
        return Matrix._new(self.field, tuple(tuple(r) for r in mirror))

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.nrows

    # ------------------------------------------------------------------
    # Kronecker product and blocking
    # ------------------------------------------------------------------
    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product: block (i, j) of the result is self[i,j] * other."""
        self._require_same_field(other)
        f = self.field
        mul = f.mul
        out = []
        for arow in self._rows:
            for brow in other._rows:
                out.append(tuple(mul(a, b) for a in arow for b in brow))
        return Matrix._new(f, tuple(out))

    def _check_block_size(self, p: int):
        if p < 1:
            raise ValueError("block size must be positive")
        if self.nrows % p or self.ncols % p:
            raise ValueError(
                f"block size {p} does not divide {self.nrows}x{self.ncols}")

    def block(self, p: int, i: int, j: int) -> "Matrix":
        """The p x p block in block-row i, block-column j (0-based)."""
        self._check_block_size(p)
        if not (0 <= i < self.nrows // p and 0 <= j < self.ncols // p):
            raise IndexError(f"block index ({i}, {j}) out of range")
        return Matrix._new(self.field, tuple(
            row[j * p:(j + 1) * p] for row in self._rows[i * p:(i + 1) * p]))

    def block_row(self, p: int, i: int) -> "Matrix":
        """Block-row strip i: the p x ncols submatrix of rows i*p..(i+1)*p."""
        self._check_block_size(p)
        if not 0 <= i < self.nrows // p:
            raise IndexError(f"block row {i} out of range")
        return Matrix._new(self.field, self._rows[i * p:(i + 1) * p])

    def block_col(self, p: int, j: int) -> "Matrix":
        """Block-column strip j: the nrows x p submatrix of columns j*p..(j+1)*p."""
        self._check_block_size(p)
        if not 0 <= j < self.ncols // p:
            raise IndexError(f"block column {j} out of range")
        return Matrix._new(self.field, tuple(
            row[j * p:(j + 1) * p] for row in self._rows))

    @classmethod
    def from_blocks(cls, grid) -> "Matrix":
        """Assemble a matrix from a rectangular grid of matrices.

        Blocks in one grid row must share a height, blocks in one grid
        column must share a width, and all must share one field.
        """
        grid = [list(row) for row in grid]
        if not grid or not grid[0]:
            raise ValueError("block grid must be non-empty")
        field = grid[0][0].field
        widths = [b.ncols for b in grid[0]]
        rows = []
        for grow in grid:
            if len(grow) != len(widths):
                raise ValueError("block grid rows have inconsistent lengths")
            h = grow[0].nrows
            for b, w in zip(grow, widths):
                if b.field != field:
                    raise FieldMismatchError("blocks over different fields")
                if b.nrows != h or b.ncols != w:
                    raise ValueError("block dimensions are inconsistent")
            for i in range(h):
                merged = []
                for b in grow:
                    merged.extend(b._rows[i])
                rows.append(tuple(merged))
        return cls._new(field, tuple(rows))
