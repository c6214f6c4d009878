"""Exact linear algebra over the rationals.

Plain Gauss-Jordan elimination on ``Fraction`` entries.  The matrices met in
this package are small with tiny integer entries, so no fraction-free tricks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class RationalMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence] = (), cols: int | None = None):
        self.entries = [[Fraction(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        if cols is None:
            cols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != cols for row in self.entries):
            raise ValueError("ragged matrix")
        self.cols = cols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def apply(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.entries]


def _as_matrix(m) -> RationalMatrix:
    return m if isinstance(m, RationalMatrix) else RationalMatrix(m)


def _echelon(m: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon rows (copied) and pivot columns."""
    a = [list(row) for row in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        pivot_row = a[r]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], pivot_row)]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    m = _as_matrix(m)
    return len(_echelon(m)[1])


def rref(m) -> RationalMatrix:
    m = _as_matrix(m)
    return RationalMatrix(_echelon(m)[0], cols=m.cols)


def kernel_basis(m) -> list[list[Fraction]]:
    """Basis of the right null space, one vector per free column."""
    m = _as_matrix(m)
    a, pivots = _echelon(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, p in zip(a, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis
