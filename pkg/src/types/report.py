from dataclasses import asdict, dataclass
from typing import Dict, List, Tuple

VIOLATION_TOLERANCE = 1e-9

CONVENTIONAL_IDS = ("BELL1", "BELL2", "BELL3")
ENTROPIC_IDS = ("EBELL1", "EBELL2", "EBELL3")
INEQUALITY_IDS = (
    CONVENTIONAL_IDS + ("BELL_STD",) + ENTROPIC_IDS + ("EBELL_STD", "ECHSH", "WIGNER")
)

CONDITIONAL_LABELS = ("H(A|BC)", "H(B|AC)", "H(C|AB)")


@dataclass(frozen=True)
class InequalityReport:
    """One inequality `lhs <= rhs`. Violated iff margin < -VIOLATION_TOLERANCE."""

    id: str
    lhs: float
    rhs: float
    margin: float
    violated: bool

    @classmethod
    def evaluate(cls, id: str, lhs: float, rhs: float) -> "InequalityReport":
        assert id in INEQUALITY_IDS, f"Unknown inequality {id}"
        margin = rhs - lhs
        violated = bool(margin < -VIOLATION_TOLERANCE)
        return cls(id=id, lhs=lhs, rhs=rhs, margin=margin, violated=violated)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class NegativityDiagnosis:
    """Conditional entropies forced negative, with their upper bounds in bits."""

    entries: Tuple[Tuple[str, float], ...] = ()

    @property
    def is_empty(self) -> bool:
        return len(self.entries) == 0

    def to_dict(self) -> Dict[str, List[dict]]:
        entries = [{"label": label, "upper_bound": bound} for label, bound in self.entries]
        return {"entries": entries}


@dataclass(frozen=True)
class SweepRow:
    """One row of a phi sweep at fixed theta: entropic and conventional left-hand sides."""

    phi: float
    lE1: float
    lE2: float
    lE3: float
    lC1: float
    lC2: float
    lC3: float

    def values(self) -> Tuple[float, ...]:
        return (self.phi, self.lE1, self.lE2, self.lE3, self.lC1, self.lC2, self.lC3)


@dataclass(frozen=True)
class OptimumReport:
    family: str
    theta_star: float
    phi_star: float
    lhs_star: float
    inequality_id: str

    def to_dict(self) -> dict:
        return asdict(self)
