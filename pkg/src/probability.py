"""Joint distributions and count tables over dichotomic variables.

Also holds the purely combinatorial inequalities: the deterministic bound
ab + ac - bc <= 1 and the counting inequality on populations.
"""
import logging
from typing import AbstractSet, Iterable, Mapping, Sequence, Tuple, Union

import numpy as np

from .errors import BAD_ARITY, OUT_OF_RANGE, UNKNOWN_LABEL, InvalidInputError
from .types import CorrelationSet, CountTable, InequalityReport, JointDistribution, Outcome
from .types.distribution import MAX_VARIABLES, outcome_key, outcome_tuples

logger = logging.getLogger(__name__)

BELL_LABELS = ("A", "B", "C")

# a * b for each cell of a pair table, (+, +) first.
PRODUCT_SIGNS = np.array([[1.0, -1.0], [-1.0, 1.0]])

TABLE = Union[Sequence[float], np.ndarray, Mapping[str, float]]


def make_joint(labels: Sequence[str], table: TABLE) -> JointDistribution:
    """Build a validated distribution.

    Args:
        labels (Sequence[str]): 1-3 distinct labels.
        table: 2^n probabilities in lexicographic outcome order (+1 first),
            a nested (2, ..., 2) array, or a mapping from '+'/'-' keys like "+-+".

    Returns:
        JointDistribution
    """
    labels = tuple(labels)
    if isinstance(table, Mapping):
        expected = [outcome_key(o) for o in outcome_tuples(len(labels))]
        if set(table) != set(expected):
            e = f"Probability keys should be exactly {expected}. Got {sorted(table)}."
            logger.error(e)
            raise InvalidInputError(BAD_ARITY, e)
        table = [table[k] for k in expected]
    try:
        table = np.asarray(table, dtype=np.float64)
    except OverflowError:
        e = "Probabilities should be finite floating-point numbers."
        logger.error(e)
        raise InvalidInputError(OUT_OF_RANGE, e)
    return JointDistribution(labels, table)


def marginal_table(joint: JointDistribution, keep: AbstractSet[str]) -> np.ndarray:
    """Raw marginal table, no validation. Axes keep the joint's variable order."""
    table = joint.probabilities
    dropped = 0
    for axis, label in enumerate(joint.variables):
        if label not in keep:
            table = table.sum(axis=axis - dropped)
            dropped += 1
    return table


def marginalize(joint: JointDistribution, keep: Iterable[str]) -> JointDistribution:
    """Sum out every variable not in `keep`.

    Dropped variables are summed one axis at a time in the joint's variable
    order, so marginalizing in two steps (in that order) is bit-identical to
    one step. The result keeps the joint's variable order.
    """
    keep = set(keep)
    if not keep:
        e = "At least one variable should be kept."
        logger.error(e)
        raise InvalidInputError(UNKNOWN_LABEL, e)
    unknown = keep - set(joint.variables)
    if unknown:
        e = f"Unknown variables {sorted(unknown)}. Available: {joint.variables}."
        logger.error(e)
        raise InvalidInputError(UNKNOWN_LABEL, e)

    variables = tuple(v for v in joint.variables if v in keep)
    return JointDistribution(variables, marginal_table(joint, keep))


def correlation(pair: JointDistribution) -> float:
    """<xy> = sum of x * y * p(x, y) over the 4 cells."""
    if pair.arity != 2:
        e = f"Correlation needs exactly 2 variables. Got {pair.variables}."
        logger.error(e)
        raise InvalidInputError(BAD_ARITY, e)
    value = float(np.sum(PRODUCT_SIGNS * pair.probabilities))
    return float(np.clip(value, -1.0, 1.0))


def pair_correlations(joint: JointDistribution) -> CorrelationSet:
    """Correlations of the marginal pairs of a triple.

    The variables are read positionally as A, B, C. A' is modelled as the
    perfectly anticorrelated copy of A.
    """
    if joint.arity != 3:
        e = f"Pair correlations need 3 variables. Got {joint.variables}."
        logger.error(e)
        raise InvalidInputError(BAD_ARITY, e)
    a, b, c = joint.variables
    ab = correlation(marginalize(joint, (a, b)))
    ac = correlation(marginalize(joint, (a, c)))
    bc = correlation(marginalize(joint, (b, c)))
    return CorrelationSet(ab=ab, ac=ac, bc=bc, a_prime_b=-ab, a_a_prime=-1.0)


def deterministic_bound(a: int, b: int, c: int) -> int:
    """ab + ac - bc for one set of outcomes. Never exceeds 1."""
    a, b, c = Outcome(a), Outcome(b), Outcome(c)
    return int(a * b + a * c - b * c)


def deterministic_bounds(a: int, b: int, c: int) -> Tuple[int, int, int]:
    """The deterministic bound and its two cyclic permutations a -> b -> c."""
    return (
        deterministic_bound(a, b, c),
        deterministic_bound(b, c, a),
        deterministic_bound(c, a, b),
    )


def wigner_check(table: CountTable) -> InequalityReport:
    """n(a, not b) <= n(a, not c) + n(not b, c).

    Holds for every population: each (a, not b) object is either
    (a, not b, c), counted in n(not b, c), or (a, not b, not c), counted in
    n(a, not c).
    """
    lhs = table.count(a=True, b=False)
    rhs = table.count(a=True, c=False) + table.count(b=False, c=True)
    logger.debug(f"Counting inequality: {lhs} <= {rhs} over {table.total} objects")
    return InequalityReport.evaluate("WIGNER", float(lhs), float(rhs))


def random_joint(seed: int, n: int) -> JointDistribution:
    """Random distribution from 2^n normalized uniform draws on (0, 1).

    Deterministic for a given seed. Not uniform over the simplex. Negative
    seeds are read as signed 64-bit integers, so -1 and 2**64 - 1 agree.
    """
    if n not in range(1, MAX_VARIABLES + 1):
        e = f"Arity should be 1, 2 or 3. Got {n}."
        logger.error(e)
        raise InvalidInputError(BAD_ARITY, e)
    if seed < -(2**63) or seed >= 2**64:
        e = f"Seed should be a signed or unsigned 64-bit integer. Got {seed}."
        logger.error(e)
        raise InvalidInputError(OUT_OF_RANGE, e)
    rng = np.random.default_rng(seed % 2**64)
    draws = rng.uniform(np.nextafter(0.0, 1.0), 1.0, size=2**n)
    return JointDistribution(BELL_LABELS[:n], draws / draws.sum())
