"""Singlet-pair measurement statistics and the Bell-setup correlations.

Axes live in the x-z plane and are given by their polar angle from z.
"""
import logging
import math
from typing import Sequence, Tuple

import numpy as np

from .entropy import mutual_from_correlation
from .probability import make_joint
from .types import (
    CorrelationSet,
    JointDistribution,
    MeasurementSetup,
    Outcome,
    PairwiseEntropySummary,
)

logger = logging.getLogger(__name__)

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]])
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
IDENTITY = np.eye(2)

# |up> = (1, 0), |down> = (0, 1); first particle is the left tensor factor.
UP = np.array([1.0, 0.0])
DOWN = np.array([0.0, 1.0])


def singlet_pair_distribution(
    axis1: float, axis2: float, labels: Sequence[str] = ("S1", "S2")
) -> JointDistribution:
    """p(s1, s2) = (1 - s1 s2 cos(axis1 - axis2)) / 4.

    Args:
        axis1 (float): polar angle of the measurement axis on particle 1.
        axis2 (float): polar angle of the measurement axis on particle 2.
        labels: labels of the two outcomes.

    Returns:
        JointDistribution: uniform marginals, correlation -cos(axis1 - axis2).
    """
    c = math.cos(axis1 - axis2)
    aligned = (1.0 - c) / 4.0
    anti = (1.0 + c) / 4.0
    return make_joint(labels, [aligned, anti, anti, aligned])


def singlet_state() -> np.ndarray:
    """(|up down> - |down up>) / sqrt(2)."""
    return (np.kron(UP, DOWN) - np.kron(DOWN, UP)) / np.sqrt(2.0)


def spin_projector(axis: float, outcome: int) -> np.ndarray:
    """(I + s n.sigma) / 2 for n = (sin axis, 0, cos axis)."""
    s = int(Outcome(outcome))
    n_sigma = math.sin(axis) * PAULI_X + math.cos(axis) * PAULI_Z
    return (IDENTITY + s * n_sigma) / 2.0


def singlet_pair_distribution_from_state(
    axis1: float, axis2: float, labels: Sequence[str] = ("S1", "S2")
) -> JointDistribution:
    """Reference computation: <psi| P1 (x) P2 |psi> for each pair of outcomes."""
    psi = singlet_state()
    table = np.empty((2, 2))
    for s1 in Outcome:
        for s2 in Outcome:
            projector = np.kron(spin_projector(axis1, s1), spin_projector(axis2, s2))
            table[s1.index, s2.index] = float(np.real(np.vdot(psi, projector @ psi)))
    return make_joint(labels, table)


def bell_correlations(setup: MeasurementSetup) -> CorrelationSet:
    """Quantum correlations of the Bell variables.

    <ab> is inferred through A' (anticorrelated with A), hence the plus sign.
    """
    ab = math.cos(setup.theta)
    return CorrelationSet(
        ab=ab,
        ac=-math.cos(setup.phi),
        bc=-math.cos(setup.theta - setup.phi),
        a_prime_b=-ab,
        a_a_prime=-1.0,
    )


def summary_from_correlations(corr: CorrelationSet) -> PairwiseEntropySummary:
    """Pairwise entropies for uniform +-1 marginals (1 bit each)."""
    return PairwiseEntropySummary(
        h_a=1.0,
        h_b=1.0,
        h_c=1.0,
        i_ab=mutual_from_correlation(corr.ab),
        i_ac=mutual_from_correlation(corr.ac),
        i_bc=mutual_from_correlation(corr.bc),
    )


def bell_entropy_summary(setup: MeasurementSetup) -> PairwiseEntropySummary:
    summary = summary_from_correlations(bell_correlations(setup))
    logger.debug(f"Entropy summary at theta={setup.theta}, phi={setup.phi}: {summary}")
    return summary


def chsh_mutual_entropies(setup: MeasurementSetup) -> Tuple[float, float, float, float]:
    """(H(A':B), H(A:C), H(B:C), H(A:A')) for the four-observable inequality."""
    corr = bell_correlations(setup)
    return (
        mutual_from_correlation(corr.a_prime_b),
        mutual_from_correlation(corr.ac),
        mutual_from_correlation(corr.bc),
        mutual_from_correlation(corr.a_a_prime),
    )
