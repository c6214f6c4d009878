"""First-order calculus of arrows on the Haiman chart around a monomial point.

An arrow ``tail -> head`` stands for the chart coordinate giving the
coefficient of ``x^head`` in the expansion of ``x^tail``.  Differentiating
``x * x^(r,s) = sum c^(r,s)_(i,j) x^(i+1,j)`` at the fixed point, for a tail
outside the diagram, gives exactly two kinds of first-order relation:

* shifting an arrow one step left (or down) keeps its class, as long as the
  shifted tail is still a monomial of the ideal;
* if that shift would push the head off the axis, the class is zero.

Moves to the right or up are the same relations read backwards.  Every
relation preserves ``tail - head``, so each class lives inside one
difference-vector group, and groups are finite: heads range over the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .diagram import YoungDiagram, step_sequences
from .linalg import rank


class Arrow(NamedTuple):
    tail: tuple[int, int]
    head: tuple[int, int]

    @property
    def offset(self) -> tuple[int, int]:
        return (self.tail[0] - self.head[0], self.tail[1] - self.head[1])

    def is_strictly_southwest(self) -> bool:
        dx, dy = self.offset
        return dx > 0 and dy > 0

    def __str__(self):
        (r, s), (i, j) = self
        return f"c^{{{r},{s}}}_{{{i},{j}}}"


class _DisjointSet:
    def __init__(self):
        self.parent = {}

    def find(self, e):
        self.parent.setdefault(e, e)
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller representative wins so class ids are canonical
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _offset_group(d: YoungDiagram, offset: tuple[int, int], southwest_rule: bool):
    """Classes of all cotangent arrows with a given offset: (arrow -> root, zero roots)."""
    dx, dy = offset
    arrows = []
    for (i, j) in d.cell_list:
        tail = (i + dx, j + dy)
        if tail[0] >= 0 and tail[1] >= 0 and tail not in d:
            arrows.append(Arrow(tail, (i, j)))
    ds = _DisjointSet()
    zero_members = []
    for a in arrows:
        ds.find(a)
        (r, s), (i, j) = a
        for step in ((1, 0), (0, 1)):
            shifted_tail = (r - step[0], s - step[1])
            if shifted_tail[0] < 0 or shifted_tail[1] < 0 or shifted_tail in d:
                continue
            shifted_head = (i - step[0], j - step[1])
            if shifted_head[0] < 0 or shifted_head[1] < 0:
                zero_members.append(a)
            else:
                ds.union(a, Arrow(shifted_tail, shifted_head))
        if southwest_rule and a.is_strictly_southwest():
            zero_members.append(a)
    roots = {a: ds.find(a) for a in arrows}
    zero_roots = {roots[a] for a in zero_members}
    return roots, zero_roots


@dataclass
class ArrowClassTable:
    diagram: YoungDiagram
    maxdeg: int
    box: int
    # arrow -> canonical class representative, or None for the zero class
    classes: dict[Arrow, Arrow | None] = field(repr=False)
    nonzero: list[Arrow] = field(repr=False)

    def __post_init__(self):
        self._position = {c: k for k, c in enumerate(self.nonzero)}

    def class_of(self, arrow) -> Arrow | None:
        arrow = Arrow(tuple(arrow[0]), tuple(arrow[1]))
        if arrow.head not in self.diagram or arrow.tail in self.diagram:
            raise ValueError(f"{arrow} is not a cotangent arrow for {self.diagram}")
        try:
            return self.classes[arrow]
        except KeyError:
            raise KeyError(f"{arrow} has its tail outside the box [0, {self.box}]^2") from None

    def is_zero(self, arrow) -> bool:
        return self.class_of(arrow) is None

    def position(self, cls: Arrow) -> int:
        return self._position[cls]

    def members(self, cls: Arrow) -> list[Arrow]:
        return sorted(a for a, c in self.classes.items() if c == cls)


def classify_arrows(d: YoungDiagram, maxdeg: int, southwest_rule: bool = True) -> ArrowClassTable:
    """Group every cotangent arrow with tail in ``[0, maxdeg + width + height]^2`` into classes.

    Classes are closed over all arrows of the same offset, not just those in
    the box, so the table does not depend on the box beyond which arrows it lists.
    """
    if maxdeg < 1:
        raise ValueError("maxdeg must be positive")
    box = maxdeg + d.width + d.height
    classes: dict[Arrow, Arrow | None] = {}
    for dx in range(-(d.width - 1), box + 1):
        for dy in range(-(d.height - 1), box + 1):
            roots, zero_roots = _offset_group(d, (dx, dy), southwest_rule)
            for a, root in roots.items():
                if a.tail[0] <= box and a.tail[1] <= box:
                    classes[a] = None if root in zero_roots else root
    nonzero = sorted({c for c in classes.values() if c is not None})
    return ArrowClassTable(d, maxdeg, box, classes, nonzero)


def cotangent_dim(table: ArrowClassTable) -> int:
    return len(table.nonzero)


def trace_arrows(d: YoungDiagram, p: tuple[int, int]) -> list[Arrow]:
    """Non-constant diagonal entries of multiplication by ``x^r y^s``."""
    r, s = p
    out = []
    for (h, k) in d.cell_list:
        tail = (r + h, s + k)
        if tail not in d:
            out.append(Arrow(tail, (h, k)))
    return out


def dtrace_vector(d: YoungDiagram, p: tuple[int, int], table: ArrowClassTable) -> list[Fraction]:
    r, s = p
    if r < 0 or s < 0 or r + s < 1:
        raise ValueError(f"power sum index must be nonnegative and nonconstant: {p}")
    vec = [Fraction(0)] * len(table.nonzero)
    for a in trace_arrows(d, p):
        cls = table.class_of(a)
        if cls is not None:
            vec[table.position(cls)] += 1
    return vec


def pure_indices(n: int) -> list[tuple[int, int]]:
    return [(r, 0) for r in range(1, n + 1)] + [(0, s) for s in range(1, n + 1)]


def mixed_indices(n: int) -> list[tuple[int, int]]:
    return [(r, s) for r in range(1, n) for s in range(1, n - r + 1)]


def rank_dh_arrows(d: YoungDiagram, maxdeg: int | None = None) -> int:
    maxdeg = d.n if maxdeg is None else maxdeg
    table = classify_arrows(d, maxdeg)
    for p in mixed_indices(maxdeg):
        if any(dtrace_vector(d, p, table)):
            raise AssertionError(f"mixed trace differential {p} is nonzero on {d}")
    return rank([dtrace_vector(d, p, table) for p in pure_indices(maxdeg)])


def nonvanishing_pattern(d: YoungDiagram, maxdeg: int | None = None) -> dict[tuple[int, int], bool]:
    """Which trace differentials are nonzero, keyed by power-sum index."""
    maxdeg = d.n if maxdeg is None else maxdeg
    table = classify_arrows(d, maxdeg)
    return {p: any(dtrace_vector(d, p, table)) for p in pure_indices(maxdeg) + mixed_indices(maxdeg)}


def expected_pattern(d: YoungDiagram, maxdeg: int | None = None) -> dict[tuple[int, int], bool]:
    maxdeg = d.n if maxdeg is None else maxdeg
    dh, dv = step_sequences(d)
    out = {}
    for r, s in pure_indices(maxdeg) + mixed_indices(maxdeg):
        if s == 0:
            out[(r, s)] = r <= max(dh)
        elif r == 0:
            out[(r, s)] = s <= max(dv)
        else:
            out[(r, s)] = False
    return out
