import logging

import numpy as np

from ..entropy import mutual_from_correlation
from ..inequalities import conventional_lhs, entropic_lhs
from ..types.report import CONVENTIONAL_IDS, ENTROPIC_IDS
from .base import CostBase

logger = logging.getLogger(__name__)


def singlet_correlations(theta: np.ndarray, phi: np.ndarray):
    """<ab>, <ac>, <bc> of the EPR Bell setup, vectorized."""
    return np.cos(theta), -np.cos(phi), -np.cos(theta - phi)


class EntropicViolation(CostBase):
    """Excess of the entropic Bell inequalities for singlet measurements.
    Marginals are uniform, so every bound is 1 bit.
    """

    name = "entropic"
    inequality_ids = ENTROPIC_IDS

    def lhs_rhs(self, theta: np.ndarray, phi: np.ndarray):
        ab, ac, bc = singlet_correlations(theta, phi)
        lhs = entropic_lhs(
            mutual_from_correlation(ab), mutual_from_correlation(ac), mutual_from_correlation(bc)
        )
        return lhs, (1.0, 1.0, 1.0)


class ConventionalViolation(CostBase):
    """Excess of the three basic Bell inequalities for singlet measurements."""

    name = "conventional"
    inequality_ids = CONVENTIONAL_IDS

    def lhs_rhs(self, theta: np.ndarray, phi: np.ndarray):
        return conventional_lhs(*singlet_correlations(theta, phi)), (1.0, 1.0, 1.0)
