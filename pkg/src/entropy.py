"""Shannon entropy calculus for 1-3 dichotomic variables, in bits.

Entropies are computed from explicit marginal tables. Cells with zero
probability contribute nothing (0 log 0 = 0), via `scipy.special.entr`.
"""
import itertools
import logging
from typing import Dict, FrozenSet, Iterable, Optional, Tuple, Union

import numpy as np
from scipy.special import entr

from .errors import BAD_ARITY, OUT_OF_RANGE, OVERLAP, SAME_LABEL, InvalidInputError
from .probability import marginal_table
from .types import (
    FLOAT_NUMPY,
    EntropyDiagram,
    JointDistribution,
    PairDiagram,
    PairwiseEntropySummary,
    as_float,
)

logger = logging.getLogger(__name__)

LN2 = np.log(2.0)

# Below this distance from |c| = 1 the mutual entropy is exactly 1 bit.
CORRELATION_EDGE = 1e-15


def _table_entropy(table: np.ndarray) -> float:
    return float(entr(table).sum() / LN2)


def subset_entropies(
    joint: JointDistribution, max_size: Optional[int] = None
) -> Dict[FrozenSet[str], float]:
    """H of every subset of the variables (up to `max_size` labels), keyed by label set."""
    max_size = joint.arity if max_size is None else max_size
    entropies = {frozenset(): 0.0}
    for k in range(1, max_size + 1):
        for labels in itertools.combinations(joint.variables, k):
            keep = frozenset(labels)
            entropies[keep] = _table_entropy(marginal_table(joint, keep))
    return entropies


def _as_labels(labels: Union[str, Iterable[str]]) -> Tuple[str, ...]:
    if isinstance(labels, str):
        return (labels,)
    return tuple(labels)


def _require_arity(joint: JointDistribution, n: int, what: str) -> None:
    if joint.arity != n:
        e = f"{what} needs {n} variables. Got {joint.variables}."
        logger.error(e)
        raise InvalidInputError(BAD_ARITY, e)


def shannon_entropy(joint: JointDistribution) -> float:
    """-sum p log2 p over the whole table. In [0, n]."""
    return _table_entropy(joint.probabilities)


def mutual_information(joint: JointDistribution, x: str, y: str) -> float:
    """H(X:Y) = H(X) + H(Y) - H(XY)."""
    for label in (x, y):
        joint.axis(label)
    if x == y:
        e = f"Mutual information needs two different variables. Got {x!r} twice."
        logger.error(e)
        raise InvalidInputError(SAME_LABEL, e)
    h_x = _table_entropy(marginal_table(joint, frozenset({x})))
    h_y = _table_entropy(marginal_table(joint, frozenset({y})))
    h_xy = _table_entropy(marginal_table(joint, frozenset({x, y})))
    return h_x + h_y - h_xy


def conditional_entropy(
    joint: JointDistribution, x: str, given: Union[str, Iterable[str]]
) -> float:
    """H(X|Y...) = H(X, Y...) - H(Y...)."""
    given = _as_labels(given)
    for label in (x,) + given:
        joint.axis(label)
    if x in given:
        e = f"Variable {x!r} should not be in the conditioning set {given}."
        logger.error(e)
        raise InvalidInputError(OVERLAP, e)
    h_given = _table_entropy(marginal_table(joint, frozenset(given))) if given else 0.0
    return _table_entropy(marginal_table(joint, frozenset((x,) + given))) - h_given


def conditional_mutual(joint: JointDistribution, x: str, y: str, z: str) -> float:
    """H(X:Y|Z) = H(XZ) + H(YZ) - H(Z) - H(XYZ)."""
    _require_arity(joint, 3, "Conditional mutual information")
    for label in (x, y, z):
        joint.axis(label)
    if len({x, y, z}) != 3:
        e = f"Conditional mutual information needs three different variables. Got {x, y, z}."
        logger.error(e)
        raise InvalidInputError(SAME_LABEL, e)
    h = subset_entropies(joint)
    return (
        h[frozenset({x, z})] + h[frozenset({y, z})] - h[frozenset({z})] - h[frozenset({x, y, z})]
    )


def _ternary(h: Dict[FrozenSet[str], float], a: str, b: str, c: str) -> float:
    return (
        h[frozenset({a})]
        + h[frozenset({b})]
        + h[frozenset({c})]
        - h[frozenset({a, b})]
        - h[frozenset({a, c})]
        - h[frozenset({b, c})]
        + h[frozenset({a, b, c})]
    )


def ternary_mutual(joint: JointDistribution) -> float:
    """H(A:B:C), the centre of the Venn diagram. Can be negative."""
    _require_arity(joint, 3, "Ternary mutual information")
    return _ternary(subset_entropies(joint), *joint.variables)


def ternary_diagram(joint: JointDistribution) -> EntropyDiagram:
    """All seven cells of the Venn diagram of a triple.

    The variables are read positionally as A, B, C.
    """
    _require_arity(joint, 3, "Ternary diagram")
    h = subset_entropies(joint)
    a, b, c = (frozenset({v}) for v in joint.variables)
    ab, ac, bc = a | b, a | c, b | c
    abc = a | b | c
    return EntropyDiagram(
        alpha=h[abc] - h[bc],
        beta=h[abc] - h[ac],
        gamma=h[abc] - h[ab],
        abar=h[ab] + h[ac] - h[a] - h[abc],
        bbar=h[ab] + h[bc] - h[b] - h[abc],
        gbar=h[ac] + h[bc] - h[c] - h[abc],
        delta=_ternary(h, *joint.variables),
    )


def pairwise_summary(joint: JointDistribution) -> PairwiseEntropySummary:
    """The six entropies measurable from pair statistics."""
    _require_arity(joint, 3, "Pairwise summary")
    h = subset_entropies(joint, max_size=2)
    a, b, c = (frozenset({v}) for v in joint.variables)
    return PairwiseEntropySummary(
        h_a=h[a],
        h_b=h[b],
        h_c=h[c],
        i_ab=h[a] + h[b] - h[a | b],
        i_ac=h[a] + h[c] - h[a | c],
        i_bc=h[b] + h[c] - h[b | c],
    )


def pair_diagram(joint: JointDistribution) -> PairDiagram:
    """H(A|B), H(A:B), H(B|A) of a pair."""
    _require_arity(joint, 2, "Pair diagram")
    h = subset_entropies(joint)
    a, b = (frozenset({v}) for v in joint.variables)
    return PairDiagram(
        h_a_given_b=h[a | b] - h[b],
        mutual=h[a] + h[b] - h[a | b],
        h_b_given_a=h[a | b] - h[a],
    )


def diagram_from_summary(summary: PairwiseEntropySummary, delta: float) -> EntropyDiagram:
    """Venn diagram implied by pairwise data and a chosen centre `delta`.

    No classicality is assumed: cells may come out negative, and `delta` is
    not checked for feasibility.
    """
    gbar = summary.i_ab - delta
    bbar = summary.i_ac - delta
    abar = summary.i_bc - delta
    return EntropyDiagram(
        alpha=summary.h_a - bbar - gbar - delta,
        beta=summary.h_b - abar - gbar - delta,
        gamma=summary.h_c - abar - bbar - delta,
        abar=abar,
        bbar=bbar,
        gbar=gbar,
        delta=delta,
    )


def degree_sums(summary: PairwiseEntropySummary) -> Tuple[float, float, float]:
    """(alpha + abar, beta + bbar, gamma + gbar), independent of delta.

    Same evaluation order as the entropic inequality margins, so a sum is
    negative exactly when the matching inequality is violated.
    """
    s = summary
    return (
        s.h_a - (s.i_ab + (s.i_ac - s.i_bc)),
        s.h_b - (s.i_ab + (s.i_bc - s.i_ac)),
        s.h_c - (s.i_ac + (s.i_bc - s.i_ab)),
    )


def classical_chsh_entropies(
    summary: PairwiseEntropySummary,
) -> Tuple[float, float, float, float]:
    """(H(A':B), H(A:C), H(B:C), H(A:A')) when A' is the anticorrelated copy of A.

    A copy carries the same information as A, so H(A':B) = H(A:B) and
    H(A:A') = H(A).
    """
    return (summary.i_ab, summary.i_ac, summary.i_bc, summary.h_a)


def binary_entropy(p: FLOAT_NUMPY) -> FLOAT_NUMPY:
    """h2(p) in bits. h2(0) = h2(1) = 0."""
    p = np.asarray(p, dtype=np.float64)
    if np.any(~((p >= 0.0) & (p <= 1.0))):
        e = "Probability for the binary entropy should be in [0, 1]."
        logger.error(e)
        raise InvalidInputError(OUT_OF_RANGE, e)
    return as_float((entr(p) + entr(1.0 - p)) / LN2)


def mutual_from_correlation(c: FLOAT_NUMPY) -> FLOAT_NUMPY:
    """Mutual entropy of a pair with uniform marginals and correlation c.

    Equals 1/2 log2(1 - c^2) + c/2 log2((1 + c) / (1 - c)), evaluated as
    1 - h2((1 + c) / 2). Computed from |c|, so it is exactly even in c.
    Accepts numpy arrays.
    """
    c = np.abs(np.asarray(c, dtype=np.float64))
    if np.any(~(c <= 1.0)):
        e = "Correlation coefficient should be in [-1, 1]."
        logger.error(e)
        raise InvalidInputError(OUT_OF_RANGE, e)
    p = (1.0 + c) / 2.0
    q = (1.0 - c) / 2.0
    value = 1.0 - (entr(p) + entr(q)) / LN2
    return as_float(np.where(1.0 - c < CORRELATION_EDGE, 1.0, value))
