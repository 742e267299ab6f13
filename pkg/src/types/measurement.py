import logging
import math
from dataclasses import asdict, dataclass
from typing import Dict

from ..errors import OUT_OF_RANGE, InvalidInputError

logger = logging.getLogger(__name__)

CORRELATION_TOLERANCE = 1e-12


def wrap_angle(angle: float) -> float:
    """Map an angle to (-pi, pi]."""
    wrapped = math.remainder(angle, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


@dataclass(frozen=True)
class MeasurementSetup:
    """Bell setup in the x-z plane.

    theta ... angle of B's axis from z (first particle), radians.
    phi ... angle of C's axis from z (second particle), radians.
    """

    theta: float
    phi: float

    def __post_init__(self):
        for name, angle in (("theta", self.theta), ("phi", self.phi)):
            if not (math.isfinite(angle) and -math.pi < angle <= math.pi):
                e = f"{name} should be in (-pi, pi]. Got {angle}."
                logger.error(e)
                raise InvalidInputError(OUT_OF_RANGE, e)

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "MeasurementSetup":
        """Build from arbitrary finite angles, wrapping them into (-pi, pi]."""
        if not (math.isfinite(theta) and math.isfinite(phi)):
            e = f"Angles should be finite. Got theta={theta}, phi={phi}."
            logger.error(e)
            raise InvalidInputError(OUT_OF_RANGE, e)
        return cls(wrap_angle(theta), wrap_angle(phi))


@dataclass(frozen=True)
class CorrelationSet:
    """Correlation coefficients <ab>, <ac>, <bc>, <a'b>, <aa'>."""

    ab: float
    ac: float
    bc: float
    a_prime_b: float
    a_a_prime: float

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not (math.isfinite(value) and abs(value) <= 1.0 + CORRELATION_TOLERANCE):
                e = f"Correlation {name} should be in [-1, 1]. Got {value}."
                logger.error(e)
                raise InvalidInputError(OUT_OF_RANGE, e)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)
