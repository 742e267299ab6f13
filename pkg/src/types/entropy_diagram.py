import logging
from dataclasses import asdict, dataclass
from typing import Dict, Tuple

from ..errors import OUT_OF_RANGE, InvalidInputError

logger = logging.getLogger(__name__)

SUMMARY_TOLERANCE = 1e-9

# JSON field names of the summary.
SUMMARY_FIELDS = {
    "h_a": "hA",
    "h_b": "hB",
    "h_c": "hC",
    "i_ab": "iAB",
    "i_ac": "iAC",
    "i_bc": "iBC",
}


@dataclass(frozen=True)
class EntropyDiagram:
    """Seven cells of the ternary entropy Venn diagram, in bits.

    alpha, beta, gamma ... H(A|BC), H(B|AC), H(C|AB)
    abar, bbar, gbar ... H(B:C|A), H(A:C|B), H(A:B|C)
    delta ... H(A:B:C), may be negative even classically.
    """

    alpha: float
    beta: float
    gamma: float
    abar: float
    bbar: float
    gbar: float
    delta: float

    @property
    def total(self) -> float:
        """H(ABC) reconstructed from the cells."""
        return (
            self.alpha + self.beta + self.gamma + self.abar + self.bbar + self.gbar + self.delta
        )

    @property
    def h_a(self) -> float:
        return self.alpha + self.bbar + self.gbar + self.delta

    @property
    def h_b(self) -> float:
        return self.beta + self.abar + self.gbar + self.delta

    @property
    def h_c(self) -> float:
        return self.gamma + self.abar + self.bbar + self.delta

    @property
    def degree_sums(self) -> Tuple[float, float, float]:
        return (self.alpha + self.abar, self.beta + self.bbar, self.gamma + self.gbar)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class PairwiseEntropySummary:
    """The six entropies accessible from pair statistics, in bits."""

    h_a: float
    h_b: float
    h_c: float
    i_ab: float
    i_ac: float
    i_bc: float

    def __post_init__(self):
        hs = {"hA": self.h_a, "hB": self.h_b, "hC": self.h_c}
        for name, h in hs.items():
            if not -SUMMARY_TOLERANCE <= h <= 1.0 + SUMMARY_TOLERANCE:
                e = f"{name} should be in [0, 1] for a dichotomic variable. Got {h}."
                logger.error(e)
                raise InvalidInputError(OUT_OF_RANGE, e)
        pairs = {
            "iAB": (self.i_ab, self.h_a, self.h_b),
            "iAC": (self.i_ac, self.h_a, self.h_c),
            "iBC": (self.i_bc, self.h_b, self.h_c),
        }
        for name, (i, h1, h2) in pairs.items():
            if not -SUMMARY_TOLERANCE <= i <= min(h1, h2) + SUMMARY_TOLERANCE:
                e = f"{name} should be in [0, min of the marginal entropies]. Got {i}."
                logger.error(e)
                raise InvalidInputError(OUT_OF_RANGE, e)

    def entropy(self, label: str) -> float:
        return {"A": self.h_a, "B": self.h_b, "C": self.h_c}[label]

    def mutual(self, x: str, y: str) -> float:
        key = "".join(sorted(x + y))
        return {"AB": self.i_ab, "AC": self.i_ac, "BC": self.i_bc}[key]

    def permute(self, order: str) -> "PairwiseEntropySummary":
        """Relabel the variables. `order[k]` is the old label that becomes A, B, C.

        e.g. "CBA" swaps the roles of A and C.
        """
        if sorted(order) != ["A", "B", "C"]:
            e = f"Order should be a permutation of 'ABC'. Got {order!r}."
            logger.error(e)
            raise InvalidInputError(OUT_OF_RANGE, e)
        a, b, c = order
        return PairwiseEntropySummary(
            h_a=self.entropy(a),
            h_b=self.entropy(b),
            h_c=self.entropy(c),
            i_ab=self.mutual(a, b),
            i_ac=self.mutual(a, c),
            i_bc=self.mutual(b, c),
        )

    def to_dict(self) -> Dict[str, float]:
        return {SUMMARY_FIELDS[k]: v for k, v in asdict(self).items()}


@dataclass(frozen=True)
class PairDiagram:
    """Two-variable diagram: H(A|B), H(A:B), H(B|A) in bits."""

    h_a_given_b: float
    mutual: float
    h_b_given_a: float

    @property
    def h_a(self) -> float:
        return self.h_a_given_b + self.mutual

    @property
    def h_b(self) -> float:
        return self.h_b_given_a + self.mutual

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)
