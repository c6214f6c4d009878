"""Tangent space Hom(I, C[x,y]/I) at a monomial ideal and the derivation map into it.

Restricting a vector field ``f * d/dx`` or ``f * d/dy`` to the subscheme gives
a homomorphism ``g -> delta(g) mod I``.  The rank of this map on the 2n
monomial derivations is what the step statistic predicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .diagram import YoungDiagram, min_generators, step_sequences
from .linalg import RationalMatrix, kernel_basis, rank
from .quotient import QuotientElement, mult

X, Y = "x", "y"
DIRECTIONS = (X, Y)


@dataclass(frozen=True)
class HomElement:
    """A homomorphism I -> C[x,y]/I, recorded by its values on the minimal generators."""

    diagram: YoungDiagram
    values: tuple[QuotientElement, ...]

    @classmethod
    def from_vector(cls, d: YoungDiagram, vec: Sequence) -> "HomElement":
        n = d.n
        g = len(min_generators(d))
        if len(vec) != g * n:
            raise ValueError(f"expected {g * n} coordinates, got {len(vec)}")
        return cls(d, tuple(QuotientElement.from_vector(d, vec[t * n:(t + 1) * n]) for t in range(g)))

    @classmethod
    def from_values(cls, d: YoungDiagram, values: dict) -> "HomElement":
        """Build from ``{generator: {cell: coeff}}``; unlisted generators map to zero."""
        gens = min_generators(d).generators
        unknown = set(values) - set(gens)
        if unknown:
            raise ValueError(f"not minimal generators of {d}: {sorted(unknown)}")
        return cls(d, tuple(QuotientElement(d, values.get(g, {})) for g in gens))

    def to_vector(self) -> list[Fraction]:
        return [c for v in self.values for c in v.to_vector()]

    def __call__(self, t: int) -> QuotientElement:
        return self.values[t]

    def __add__(self, other: "HomElement") -> "HomElement":
        return HomElement(self.diagram, tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, k) -> "HomElement":
        return HomElement(self.diagram, tuple(v.scale(k) for v in self.values))

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def syzygy_defects(self) -> list[QuotientElement]:
        """``x^da * phi(g_t) - y^db * phi(g_{t+1})`` for each adjacent pair; all zero iff valid."""
        gens = min_generators(self.diagram).generators
        out = []
        for t in range(len(gens) - 1):
            (a0, b0), (a1, b1) = gens[t], gens[t + 1]
            lhs = mult((a1 - a0, 0), self.values[t])
            rhs = mult((0, b0 - b1), self.values[t + 1])
            out.append(lhs - rhs)
        return out

    def is_valid(self) -> bool:
        return all(q.is_zero() for q in self.syzygy_defects())


def syzygy_matrix(d: YoungDiagram) -> RationalMatrix:
    """Linear constraints on generator values; unknowns ordered generator-major, then by cell."""
    gens = min_generators(d).generators
    n = d.n
    idx = d.cell_index
    rows = []
    for t in range(len(gens) - 1):
        (a0, b0), (a1, b1) = gens[t], gens[t + 1]
        da, db = a1 - a0, b0 - b1
        for (i, j) in d.cell_list:
            row = [0] * (len(gens) * n)
            if (i - da, j) in d:
                row[t * n + idx[(i - da, j)]] += 1
            if (i, j - db) in d:
                row[(t + 1) * n + idx[(i, j - db)]] -= 1
            if any(row):
                rows.append(row)
    return RationalMatrix(rows, cols=len(gens) * n)


def hom_basis(d: YoungDiagram) -> list[HomElement]:
    return [HomElement.from_vector(d, v) for v in kernel_basis(syzygy_matrix(d))]


def derivation_image(d: YoungDiagram, cell: tuple[int, int], direction: str) -> HomElement:
    """The homomorphism ``g -> x^i y^j * dg/d(direction) mod I`` for ``cell = (i, j)``."""
    i, j = cell
    values = []
    for a, b in min_generators(d).generators:
        if direction == X:
            coeff, image = a, (a - 1 + i, b + j)
        elif direction == Y:
            coeff, image = b, (a + i, b - 1 + j)
        else:
            raise ValueError(f"direction must be 'x' or 'y', not {direction!r}")
        values.append(QuotientElement(d, {image: coeff} if coeff and image in d else {}))
    return HomElement(d, tuple(values))


def derivation_index(d: YoungDiagram) -> list[tuple[tuple[int, int], str]]:
    """Row labels of the derivation matrix: every d/dx cell, then every d/dy cell."""
    return [(c, direction) for direction in DIRECTIONS for c in d.cell_list]


def alpha_matrix(d: YoungDiagram) -> RationalMatrix:
    rows = [derivation_image(d, c, direction).to_vector() for c, direction in derivation_index(d)]
    return RationalMatrix(rows, cols=len(min_generators(d)) * d.n)


def rank_alpha_oracle(d: YoungDiagram) -> int:
    return rank(alpha_matrix(d))


def kernel_alpha_check(d: YoungDiagram) -> bool:
    """Check which monomial derivations die in Hom(I, O) and that the survivors are independent.

    Only ``y^j d/dx`` with ``j < max(dv)`` and ``x^i d/dy`` with ``i < max(dh)``
    may survive; every derivation with an ``x`` factor in front of ``d/dx`` (or a
    ``y`` factor in front of ``d/dy``) must vanish.
    """
    dh, dv = step_sequences(d)
    survivors = []
    for (i, j), direction in derivation_index(d):
        image = derivation_image(d, (i, j), direction)
        if direction == X:
            expect_zero = i >= 1 or j >= max(dv)
        else:
            expect_zero = j >= 1 or i >= max(dh)
        if image.is_zero() != expect_zero:
            return False
        if not expect_zero:
            survivors.append(image.to_vector())
    if len(survivors) != max(dh) + max(dv):
        return False
    return rank(RationalMatrix(survivors)) == len(survivors)
