"""Square matrices over Z[Y]: determinant and first adjugate row."""
from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly, VariableMismatch


@dataclass(frozen=True)
class PolyMatrix:
    entries: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        tags = {e.var for r in rows for e in r}
        if len(tags) > 1:
            raise VariableMismatch(f"mixed variable tags {sorted(tags)}")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def var(self) -> str:
        return self.entries[0][0].var if self.entries else "Y"

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def det_adjugate(A: PolyMatrix) -> tuple[Poly, list[Poly]]:
    """Determinant of A and row 0 of its adjugate.

    Cofactors C[j][0] of A are minors of the transpose along its first row,
    so a single memoized Laplace expansion of A^T over column subsets
    (O(n 2^n) ring operations) yields both.  No division is ever needed.
    """
    n = A.n
    if n < 1:
        raise ValueError("empty matrix")
    var = A.var
    B = [[A.entries[j][i] for j in range(n)] for i in range(n)]
    memo: dict[tuple[int, int], Poly] = {}

    # det of rows [row, n) of B restricted to the columns in mask
    def minor(row: int, mask: int) -> Poly:
        if row == n:
            return Poly.constant(1, var)
        key = (row, mask)
        if key in memo:
            return memo[key]
        total = Poly((), var)
        sign = 1
        for col in range(n):
            if mask >> col & 1:
                entry = B[row][col]
                if not entry.is_zero():
                    term = entry * minor(row + 1, mask & ~(1 << col))
                    total = total + term if sign > 0 else total - term
                sign = -sign
        memo[key] = total
        return total

    full = (1 << n) - 1
    adj_row0 = []
    for j in range(n):
        m = minor(1, full & ~(1 << j))
        adj_row0.append(m if j % 2 == 0 else -m)
    det = Poly((), var)
    for j in range(n):
        det = det + B[0][j] * adj_row0[j]
    return det, adj_row0
