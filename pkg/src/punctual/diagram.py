"""Young diagrams of monomial ideals in two variables.

A cell ``(i, j)`` stands for the monomial ``x^i y^j``; ``i`` is the column and
``j`` the row, with rows counted from the bottom.  ``rows[j]`` is the length of
row ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple


class InvalidPartitionError(ValueError):
    pass


class NonCofiniteError(ValueError):
    """The monomials given do not cut out a finite-length subscheme."""


class StepSequences(NamedTuple):
    delta_h: tuple[int, ...]
    delta_v: tuple[int, ...]


@dataclass(frozen=True)
class MonomialIdeal:
    # exponent pairs (a, b), a strictly increasing and b strictly decreasing
    generators: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __str__(self):
        return ", ".join(monomial_str(a, b) for a, b in self.generators)


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...]

    def __post_init__(self):
        if not self.rows or any(r <= 0 for r in self.rows):
            raise InvalidPartitionError(f"not a partition: {self.rows!r}")
        if any(a < b for a, b in zip(self.rows, self.rows[1:])):
            raise InvalidPartitionError(f"rows must be weakly decreasing: {self.rows!r}")

    @property
    def n(self) -> int:
        return sum(self.rows)

    @property
    def width(self) -> int:
        return self.rows[0]

    @property
    def height(self) -> int:
        return len(self.rows)

    @cached_property
    def cell_list(self) -> tuple[tuple[int, int], ...]:
        """Cells in row-major order: bottom row first, left to right."""
        return tuple((i, j) for j, length in enumerate(self.rows) for i in range(length))

    @cached_property
    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.cell_list)

    @cached_property
    def cell_index(self) -> dict[tuple[int, int], int]:
        return {c: k for k, c in enumerate(self.cell_list)}

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 0 <= j < len(self.rows) and 0 <= i < self.rows[j]

    def column_height(self, i: int) -> int:
        return sum(1 for r in self.rows if r > i)

    def __str__(self):
        return "+".join(map(str, self.rows))


def monomial_str(a: int, b: int) -> str:
    parts = []
    for var, e in (("x", a), ("y", b)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts) or "1"


def from_partition(parts: Iterable[int]) -> YoungDiagram:
    parts = list(parts)
    if not parts:
        raise InvalidPartitionError("empty partition")
    if any(int(p) != p or p <= 0 for p in parts):
        raise InvalidPartitionError(f"partition entries must be positive integers: {parts!r}")
    return YoungDiagram(tuple(sorted((int(p) for p in parts), reverse=True)))


def from_generators(gens: Iterable[tuple[int, int]]) -> YoungDiagram:
    """Diagram of the monomials outside the ideal generated by ``gens``.

    Redundant generators are allowed and simply ignored.
    """
    gens = [(int(a), int(b)) for a, b in gens]
    if not gens:
        raise NonCofiniteError("no generators given")
    if any(a < 0 or b < 0 for a, b in gens):
        raise ValueError(f"negative exponent in {gens!r}")
    if (0, 0) in gens:
        raise NonCofiniteError("the unit ideal has an empty diagram")
    x_pows = [a for a, b in gens if b == 0]
    y_pows = [b for a, b in gens if a == 0]
    if not x_pows or not y_pows:
        raise NonCofiniteError(
            "ideal needs a pure power of x and a pure power of y to have finite colength"
        )
    height = min(y_pows)
    rows = []
    for j in range(height):
        # first column whose monomial x^i y^j lies in the ideal
        rows.append(min(a for a, b in gens if b <= j))
    return YoungDiagram(tuple(rows))


@lru_cache(maxsize=4096)
def min_generators(d: YoungDiagram) -> MonomialIdeal:
    gens = [(0, d.height)]
    for j in range(d.height - 1, -1, -1):
        if j == 0 or d.rows[j] < d.rows[j - 1]:
            gens.append((d.rows[j], j))
    return MonomialIdeal(tuple(gens))


def step_sequences(d: YoungDiagram) -> StepSequences:
    """Horizontal and vertical steps along the upper boundary, read top-left to bottom-right."""
    lengths = sorted(set(d.rows))
    delta_h = tuple(b - a for a, b in zip([0] + lengths, lengths))
    delta_v = tuple(d.rows.count(length) for length in lengths)
    return StepSequences(delta_h, delta_v)


def transpose(d: YoungDiagram) -> YoungDiagram:
    return YoungDiagram(tuple(d.column_height(i) for i in range(d.width)))


def classify(d: YoungDiagram) -> dict[str, bool]:
    k = d.height
    return {
        "is_curvilinear": d.height == 1 or d.width == 1,
        "is_hook": all(r == 1 for r in d.rows[1:]),
        "is_staircase": d.rows == tuple(range(k, 0, -1)),
        "xy_in_ideal": (1, 1) not in d,
    }


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[YoungDiagram]:
    """All partitions of ``n`` in reverse-lexicographic order, e.g. 4, 3+1, 2+2, 2+1+1, 1+1+1+1."""
    if n <= 0:
        return []
    return [YoungDiagram(p) for p in _partitions(n, n)]
