"""Rank of the Hilbert-Chow differential by direct first-order deformation.

Along a tangent vector ``phi`` every chart coordinate changes by the matching
coefficient of ``nf1``, so the derivative of ``Tr(x^r y^s)`` is a sum of such
coefficients over the diagonal.  This path never touches the arrow relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrows import mixed_indices, pure_indices
from .diagram import YoungDiagram
from .linalg import RationalMatrix, rank
from .quotient import nf1
from .tangent import HomElement, hom_basis


def dtrace_value(d: YoungDiagram, p: tuple[int, int], phi: HomElement) -> Fraction:
    r, s = p
    if r < 0 or s < 0 or r + s < 1:
        raise ValueError(f"power sum index must be nonnegative and nonconstant: {p}")
    total = Fraction(0)
    for (h, k) in d.cell_list:
        tail = (r + h, s + k)
        if tail not in d:
            c = nf1(tail, phi, d)[(h, k)]
            if c:
                total += c
    return total


@dataclass
class TraceDifferentialMatrix:
    indices: list[tuple[int, int]]
    basis: list[HomElement]
    matrix: RationalMatrix

    def row(self, p: tuple[int, int]) -> list[Fraction]:
        return self.matrix.entries[self.indices.index(p)]


def dtrace_matrix(d: YoungDiagram, maxdeg: int | None = None) -> TraceDifferentialMatrix:
    maxdeg = d.n if maxdeg is None else maxdeg
    indices = pure_indices(maxdeg) + mixed_indices(maxdeg)
    basis = hom_basis(d)
    rows = [[dtrace_value(d, p, phi) for phi in basis] for p in indices]
    return TraceDifferentialMatrix(indices, basis, RationalMatrix(rows, cols=len(basis)))


def rank_dh_deform(d: YoungDiagram, maxdeg: int | None = None) -> int:
    return rank(dtrace_matrix(d, maxdeg).matrix)
