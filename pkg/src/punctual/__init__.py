"""Zariski tangent spaces of the punctual Hilbert scheme at monomial points of the plane."""

from .diagram import (MonomialIdeal, StepSequences, YoungDiagram, classify, enumerate_partitions,
                      from_generators, from_partition, min_generators, step_sequences, transpose)
from .verdicts import analyze, dim_tangent_pn, rank_closed, survey, verify

__all__ = [
    "MonomialIdeal", "StepSequences", "YoungDiagram", "analyze", "classify", "dim_tangent_pn",
    "enumerate_partitions", "from_generators", "from_partition", "min_generators", "rank_closed",
    "step_sequences", "survey", "transpose", "verify",
]
