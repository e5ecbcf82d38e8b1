"""Rank decomposition of a square matrix through its rank normal form.

For any square S over a field there are invertible P and Q with
P @ S @ Q = diag(I_r, 0) where r = rank(S). This module computes one
such pair: row operations (recorded as P) bring S to reduced row-echelon
form, then column operations (recorded as Q) clear the remaining entries
and permute the pivots onto the leading diagonal. Identical input yields
bit-identical output.

Note the orientation: P and Q multiply S into the normal form, which is
what the corner-completion step consumes; they are the inverses of the
factors that would express S as a product through diag(I_r, 0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldSpec
from .matrix import Matrix, SingularMatrixError, _row_reduce


@dataclass(frozen=True)
class RankDecomposition:
    """Invertible pair (left, right) with left @ S @ right = diag(I_r, 0)."""

    left: Matrix
    right: Matrix
    rank: int


def rank_normal_form(field: FieldSpec, n: int, r: int) -> Matrix:
    """The n x n matrix diag(I_r, 0)."""
    if not 0 <= r <= n:
        raise ValueError(f"rank {r} out of range 0..{n}")
    return Matrix._new(field, tuple(
        tuple(1 if i == j and i < r else 0 for j in range(n))
        for i in range(n)))


def rank_decompose(s: Matrix) -> RankDecomposition:
    """Factor square S as left @ S @ right = diag(I_r, 0).

    The output is deterministic but not unique as a mathematical object;
    for S already in normal form (identity, zero) both factors come out
    as the identity because elimination performs no operations.
    """
    if not s.is_square:
        raise ValueError(f"cannot decompose {s.nrows}x{s.ncols} matrix")
    n = s.nrows
    f = s.field
    sub, mul = f.sub, f.mul

    rows = [list(r) for r in s._rows]
    left = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pivots = _row_reduce(rows, f, left)
    r = len(pivots)

    # Column phase. In RREF, pivot column pc has a lone 1 in pivot row i,
    # so clearing entry (i, j) with col_j -= rows[i][j] * col_pc touches
    # no other row; only the right factor needs the full update.
    right = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pivot_set = set(pivots)
    for i, pc in enumerate(pivots):
        prow = rows[i]
        for j in range(pc + 1, n):
            v = prow[j]
            if v and j not in pivot_set:
                prow[j] = 0
                for qrow in right:
                    qrow[j] = sub(qrow[j], mul(v, qrow[pc]))

    # Permute pivot columns onto the leading diagonal; the remaining
    # columns keep their relative order.
    if pivots != list(range(r)):
        perm = pivots + [j for j in range(n) if j not in pivot_set]
        rows = [[row[c] for c in perm] for row in rows]
        right = [[row[c] for c in perm] for row in right]

    p_mat = Matrix._new(f, tuple(tuple(row) for row in left))
    q_mat = Matrix._new(f, tuple(tuple(row) for row in right))
    return RankDecomposition(p_mat, q_mat, r)


def decomposition_check(s: Matrix, d: RankDecomposition) -> bool:
    """True iff d is a valid rank decomposition of s."""
    if not (s.is_square and d.left.nrows == s.nrows
            and d.right.nrows == s.nrows):
        return False
    try:
        d.left.inverse()
        d.right.inverse()
    except SingularMatrixError:
        return False
    if d.rank != s.rank():
        return False
    return d.left @ s @ d.right == rank_normal_form(s.field, s.nrows, d.rank)
