"""Arithmetic in the quotient ring C[x, y]/I of a monomial ideal.

The monomials of the Young diagram form a basis of the quotient, so an element
is stored as a sparse map from cells to rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Mapping

from .diagram import YoungDiagram, min_generators

if TYPE_CHECKING:
    from .tangent import HomElement

Monomial = tuple[int, int]
_ZERO = Fraction(0)


class QuotientElement:
    __slots__ = ("diagram", "coeffs")

    def __init__(self, diagram: YoungDiagram, coeffs: Mapping[Monomial, object] = ()):
        self.diagram = diagram
        self.coeffs: dict[Monomial, Fraction] = {}
        for cell, c in dict(coeffs).items():
            if cell not in diagram:
                raise ValueError(f"{cell} is not a cell of {diagram}")
            c = Fraction(c)
            if c:
                self.coeffs[cell] = c

    @classmethod
    def _trusted(cls, diagram: YoungDiagram, coeffs: dict) -> "QuotientElement":
        # caller guarantees cells lie in the diagram and coefficients are nonzero Fractions
        obj = cls.__new__(cls)
        obj.diagram = diagram
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_vector(cls, diagram: YoungDiagram, vec) -> "QuotientElement":
        return cls(diagram, dict(zip(diagram.cell_list, vec)))

    def to_vector(self) -> list[Fraction]:
        return [self.coeffs.get(c, Fraction(0)) for c in self.diagram.cell_list]

    def __getitem__(self, cell: Monomial) -> Fraction:
        return self.coeffs.get(cell, _ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "QuotientElement") -> "QuotientElement":
        out = dict(self.coeffs)
        for cell, c in other.coeffs.items():
            out[cell] = out.get(cell, 0) + c
        return QuotientElement(self.diagram, out)

    def __sub__(self, other: "QuotientElement") -> "QuotientElement":
        return self + other.scale(-1)

    def scale(self, k) -> "QuotientElement":
        return QuotientElement(self.diagram, {cell: k * c for cell, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, QuotientElement):
            return NotImplemented
        return self.diagram == other.diagram and self.coeffs == other.coeffs

    def __repr__(self):
        from .diagram import monomial_str

        if not self.coeffs:
            return "0"
        terms = [f"{c}*{monomial_str(*cell)}" for cell, c in sorted(self.coeffs.items())]
        return " + ".join(terms)


def nf0(m: Monomial, d: YoungDiagram) -> QuotientElement:
    """Normal form of a monomial: itself if it survives in the quotient, else zero."""
    return QuotientElement(d, {m: 1} if m in d else {})


def mult(m: Monomial, q: QuotientElement, d: YoungDiagram | None = None) -> QuotientElement:
    d = q.diagram if d is None else d
    a, b = m
    out = {}
    for (i, j), c in q.coeffs.items():
        cell = (i + a, j + b)
        if cell in d:
            out[cell] = c
    return QuotientElement._trusted(d, out)


def dividing_generator(m: Monomial, d: YoungDiagram, strategy: str = "max_y") -> int:
    """Index into ``min_generators(d)`` of a generator dividing ``m``."""
    gens = min_generators(d).generators
    hits = [t for t, (a, b) in enumerate(gens) if a <= m[0] and b <= m[1]]
    if not hits:
        raise ValueError(f"{m} lies in the diagram; no generator divides it")
    if strategy == "max_y":
        return max(hits, key=lambda t: gens[t][1])
    if strategy == "max_x":
        return max(hits, key=lambda t: gens[t][0])
    raise ValueError(f"unknown strategy {strategy!r}")


def nf1(m: Monomial, phi: "HomElement", d: YoungDiagram | None = None,
        strategy: str = "max_y") -> QuotientElement:
    """First-order part of the normal form of ``m`` along the deformation ``phi``.

    Each generator ``g`` is deformed to ``g - eps * phi(g)``.  Writing ``m = q*g``
    gives ``m = eps * q * phi(g)`` modulo the deformed ideal; whatever of
    ``q * phi(g)`` falls back into the ideal only contributes at order ``eps^2``.
    """
    d = phi.diagram if d is None else d
    if m in d:
        return QuotientElement._trusted(d, {})
    t = dividing_generator(m, d, strategy)
    a, b = min_generators(d).generators[t]
    return mult((m[0] - a, m[1] - b), phi.values[t], d)
