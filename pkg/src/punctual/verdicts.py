"""Tangent dimensions of the punctual Hilbert scheme at monomial points, plus cross-checks.

At a monomial point the tangent dimension is ``2n - (max dh + max dv)``.  The
functions here evaluate that closed form, compare it with the three
independent rank computations, and run exhaustive sweeps over partitions.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial

from .arrows import (classify_arrows, cotangent_dim, dtrace_vector, expected_pattern,
                     mixed_indices, pure_indices)
from .diagram import YoungDiagram, classify, enumerate_partitions, step_sequences
from .linalg import rank
from .tangent import hom_basis, kernel_alpha_check, rank_alpha_oracle
from .traces import dtrace_matrix

log = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 12
ORACLES = ("alpha", "arrows", "deform")


class OracleCapError(ValueError):
    pass


def rank_closed(d: YoungDiagram) -> int:
    dh, dv = step_sequences(d)
    return max(dh) + max(dv)


def dim_tangent_pn(d: YoungDiagram) -> int:
    return 2 * d.n - rank_closed(d)


def check_corollaries(d: YoungDiagram) -> dict[str, bool]:
    n = d.n
    if n == 1:
        return {"cor10": True, "cor11": True, "cor12": True}
    dim = dim_tangent_pn(d)
    flags = classify(d)
    return {
        "cor10": (dim == n - 1) == flags["is_curvilinear"],
        "cor11": (dim == 2 * n - 2) == flags["is_staircase"],
        "cor12": (not flags["xy_in_ideal"]) or (flags["is_hook"] and dim in (n - 1, n + 1)),
    }


@dataclass
class DiagramReport:
    partition: list[int]
    n: int
    delta_h: list[int]
    delta_v: list[int]
    rank_closed: int
    dim_tangent_pn: int
    is_curvilinear: bool
    is_hook: bool
    is_staircase: bool
    xy_in_ideal: bool
    rank_alpha: int | None = None
    rank_arrows: int | None = None
    rank_deform: int | None = None
    oracles_agree: bool | None = None

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


def _rank_arrows_fast(d: YoungDiagram) -> int:
    table = classify_arrows(d, d.n)
    return rank([dtrace_vector(d, p, table) for p in pure_indices(d.n)])


def _rank_deform(d: YoungDiagram) -> int:
    return rank(dtrace_matrix(d).matrix)


_ORACLE_FUNCS = {"alpha": rank_alpha_oracle, "arrows": _rank_arrows_fast, "deform": _rank_deform}


def analyze(d: YoungDiagram, oracles=()) -> DiagramReport:
    dh, dv = step_sequences(d)
    closed = max(dh) + max(dv)
    report = DiagramReport(
        partition=list(d.rows), n=d.n, delta_h=list(dh), delta_v=list(dv),
        rank_closed=closed, dim_tangent_pn=2 * d.n - closed, **classify(d),
    )
    for name in oracles:
        if name not in _ORACLE_FUNCS:
            raise ValueError(f"unknown oracle {name!r}; choose from {ORACLES}")
        setattr(report, f"rank_{name}", _ORACLE_FUNCS[name](d))
    if oracles:
        report.oracles_agree = all(getattr(report, f"rank_{o}") == closed for o in oracles)
    return report


def _fan_out(func, items, jobs: int):
    if jobs <= 1 or len(items) < 2:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=1))


def survey(n: int, with_oracles: bool = False, oracle_cap: int = DEFAULT_ORACLE_CAP,
           jobs: int = 1, oracles=ORACLES) -> list[DiagramReport]:
    if n < 1:
        raise ValueError("n must be positive")
    if with_oracles and n > oracle_cap:
        raise OracleCapError(
            f"oracle computations are capped at n={oracle_cap} (asked for n={n}); "
            "raise the cap explicitly to go further"
        )
    diagrams = enumerate_partitions(n)
    if with_oracles:
        return _fan_out(partial(analyze, oracles=tuple(oracles)), diagrams, jobs)
    return [analyze(d) for d in diagrams]


def check_diagram(d: YoungDiagram) -> dict[str, bool]:
    """Every verification check on one diagram, by name."""
    n = d.n
    closed = rank_closed(d)
    checks: dict[str, bool] = {}

    basis = hom_basis(d)
    checks["hom_dim_2n"] = len(basis) == 2 * n
    checks["hom_basis_valid"] = all(phi.is_valid() for phi in basis)
    checks["rank_alpha"] = rank_alpha_oracle(d) == closed
    checks["kernel_alpha"] = kernel_alpha_check(d)

    table = classify_arrows(d, n)
    checks["cotangent_dim_2n"] = cotangent_dim(table) == 2 * n
    pattern = expected_pattern(d, n)
    arrow_rows = {p: dtrace_vector(d, p, table) for p in pure_indices(n) + mixed_indices(n)}
    checks["rank_arrows"] = rank([arrow_rows[p] for p in pure_indices(n)]) == closed
    checks["pattern_arrows"] = all(any(arrow_rows[p]) == pattern[p] for p in pattern)

    tdm = dtrace_matrix(d, n)
    checks["rank_deform"] = rank(tdm.matrix) == closed
    checks["pattern_deform"] = all(any(tdm.row(p)) == pattern[p] for p in pattern)

    dim = 2 * n - closed
    checks["dim_bounds"] = n == 1 or n - 1 <= dim <= 2 * n - 2
    checks.update(check_corollaries(d))
    return checks


@dataclass
class VerifyResult:
    max_n: int
    passed: bool
    diagrams_checked: int
    failures: list[tuple[str, list[str]]] = field(default_factory=list)

    @property
    def first_counterexample(self) -> tuple[str, list[str]] | None:
        return self.failures[0] if self.failures else None

    def to_dict(self) -> dict:
        out = {"max_n": self.max_n, "passed": self.passed, "diagrams_checked": self.diagrams_checked}
        if self.failures:
            out["first_counterexample"] = {
                "partition": self.failures[0][0], "failed_checks": self.failures[0][1]
            }
            out["failures"] = len(self.failures)
        return out


def verify(max_n: int, jobs: int = 1) -> VerifyResult:
    if max_n < 1:
        raise ValueError("max_n must be positive")
    diagrams = [d for n in range(1, max_n + 1) for d in enumerate_partitions(n)]
    results = _fan_out(check_diagram, diagrams, jobs)
    failures = []
    for d, checks in zip(diagrams, results):
        bad = [name for name, ok in checks.items() if not ok]
        if bad:
            log.warning("checks failed on %s: %s", d, ", ".join(bad))
            failures.append((str(d), bad))
    return VerifyResult(max_n, not failures, len(diagrams), failures)
