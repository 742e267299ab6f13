"""Conventional and entropic Bell inequalities, and the negativity diagnosis.

Every inequality reads `lhs <= rhs`. Left-hand sides are evaluated as
x + (y - z) so boundary configurations land exactly on the bound.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .entropy import degree_sums
from .errors import OUT_OF_RANGE, InvalidInputError
from .types import (
    FLOAT_NUMPY,
    VIOLATION_TOLERANCE,
    CorrelationSet,
    InequalityReport,
    NegativityDiagnosis,
    PairwiseEntropySummary,
)
from .types.report import CONDITIONAL_LABELS, CONVENTIONAL_IDS, ENTROPIC_IDS

logger = logging.getLogger(__name__)

CHSH_BOUND = 2.0
MUTUAL_TOLERANCE = 1e-9


def conventional_lhs(
    ab: FLOAT_NUMPY, ac: FLOAT_NUMPY, bc: FLOAT_NUMPY
) -> Tuple[FLOAT_NUMPY, FLOAT_NUMPY, FLOAT_NUMPY]:
    """Left-hand sides of the three basic Bell inequalities. Accepts arrays."""
    return (ab + (ac - bc), ab + (bc - ac), ac + (bc - ab))


def entropic_lhs(
    i_ab: FLOAT_NUMPY, i_ac: FLOAT_NUMPY, i_bc: FLOAT_NUMPY
) -> Tuple[FLOAT_NUMPY, FLOAT_NUMPY, FLOAT_NUMPY]:
    """Left-hand sides of the three entropic Bell inequalities. Accepts arrays."""
    return (i_ab + (i_ac - i_bc), i_ab + (i_bc - i_ac), i_ac + (i_bc - i_ab))


def conventional_bell(corr: CorrelationSet) -> List[InequalityReport]:
    lhs = conventional_lhs(corr.ab, corr.ac, corr.bc)
    return [InequalityReport.evaluate(id, l, 1.0) for id, l in zip(CONVENTIONAL_IDS, lhs)]


def standard_bell(corr: CorrelationSet) -> InequalityReport:
    """|<ab> - <ac>| + <bc> <= 1."""
    return InequalityReport.evaluate("BELL_STD", abs(corr.ab - corr.ac) + corr.bc, 1.0)


def entropic_bell(summary: PairwiseEntropySummary) -> List[InequalityReport]:
    lhs = entropic_lhs(summary.i_ab, summary.i_ac, summary.i_bc)
    rhs = (summary.h_a, summary.h_b, summary.h_c)
    return [InequalityReport.evaluate(id, l, r) for id, l, r in zip(ENTROPIC_IDS, lhs, rhs)]


def entropic_bell_standard(summary: PairwiseEntropySummary) -> InequalityReport:
    """|H(A:B) - H(A:C)| + H(B:C) <= 1.

    The bound 1 assumes uniform marginals, H(A) = H(B) = H(C) = 1.
    """
    lhs = abs(summary.i_ab - summary.i_ac) + summary.i_bc
    return InequalityReport.evaluate("EBELL_STD", lhs, 1.0)


def entropic_chsh(
    i_a_prime_b: float, i_ac: float, i_bc: float, i_a_a_prime: float
) -> InequalityReport:
    """H(A':B) + H(A:C) - H(B:C) + H(A:A') <= 2."""
    for name, value in (
        ("H(A':B)", i_a_prime_b),
        ("H(A:C)", i_ac),
        ("H(B:C)", i_bc),
        ("H(A:A')", i_a_a_prime),
    ):
        if not -MUTUAL_TOLERANCE <= value <= 1.0 + MUTUAL_TOLERANCE:
            e = f"{name} should be in [0, 1] bits. Got {value}."
            logger.error(e)
            raise InvalidInputError(OUT_OF_RANGE, e)
    lhs = i_a_prime_b + (i_ac - i_bc) + i_a_a_prime
    return InequalityReport.evaluate("ECHSH", lhs, CHSH_BOUND)


def diagnose_negativity(summary: PairwiseEntropySummary) -> NegativityDiagnosis:
    """Conditional entropies that must be negative.

    A negative degree sum alpha + abar means alpha <= alpha + abar < 0,
    since abar >= 0 by strong subadditivity. Only the bound is reported:
    the diagram itself is not fixed by pairwise data.
    """
    entries = tuple(
        (label, s)
        for label, s in zip(CONDITIONAL_LABELS, degree_sums(summary))
        if s < -VIOLATION_TOLERANCE
    )
    if entries:
        logger.info(f"Negative conditional entropies forced: {entries}")
    return NegativityDiagnosis(entries=entries)


def evaluate_all(
    corr: CorrelationSet,
    summary: PairwiseEntropySummary,
    chsh: Optional[Sequence[float]] = None,
) -> List[InequalityReport]:
    """Every applicable report, conventional family first."""
    reports = conventional_bell(corr) + [standard_bell(corr)]
    reports += entropic_bell(summary) + [entropic_bell_standard(summary)]
    if chsh is not None:
        reports.append(entropic_chsh(*chsh))
    n_violated = sum(r.violated for r in reports)
    logger.info(f"{n_violated} of {len(reports)} inequalities violated")
    return reports


def max_margin(
    lhs: Sequence[FLOAT_NUMPY], rhs: Sequence[FLOAT_NUMPY]
) -> Tuple[np.ndarray, np.ndarray]:
    """Largest lhs - rhs over a family, and the index attaining it.

    Ties go to the lowest index.
    """
    excess = np.stack([np.asarray(l, dtype=np.float64) - r for l, r in zip(lhs, rhs)])
    index = np.argmax(excess, axis=0)
    best = np.take_along_axis(excess, np.expand_dims(index, 0), axis=0)[0]
    return best, index
