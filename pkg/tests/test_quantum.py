import math

import numpy as np
import pytest

from src import probability, quantum
from src.entropy import mutual_information
from src.types import MeasurementSetup, Outcome

from .conftest import ENTROPIC_PHI, ENTROPIC_THETA


def test_singlet_pair_distribution_aligned_axes():
    joint = quantum.singlet_pair_distribution(0.3, 0.3)
    # Same axis: outcomes always opposite.
    assert joint.probability([1, 1]) == pytest.approx(0.0, abs=1e-15)
    assert joint.probability([1, -1]) == pytest.approx(0.5)
    assert probability.correlation(joint) == pytest.approx(-1.0)


def test_singlet_pair_distribution_marginals_uniform():
    joint = quantum.singlet_pair_distribution(0.1, 2.0, labels=("B", "C"))
    assert joint.variables == ("B", "C")
    np.testing.assert_allclose(probability.marginalize(joint, {"B"}).flat, [0.5, 0.5])
    np.testing.assert_allclose(probability.marginalize(joint, {"C"}).flat, [0.5, 0.5])
    assert probability.correlation(joint) == pytest.approx(-math.cos(0.1 - 2.0), abs=1e-12)


def test_singlet_state_normalized():
    psi = quantum.singlet_state()
    assert np.vdot(psi, psi) == pytest.approx(1.0)


@pytest.mark.parametrize("axis", [0.0, 0.7, -2.1])
def test_spin_projectors(axis):
    plus = quantum.spin_projector(axis, Outcome.PLUS)
    minus = quantum.spin_projector(axis, -1)
    np.testing.assert_allclose(plus + minus, np.eye(2), atol=1e-15)
    np.testing.assert_allclose(plus @ plus, plus, atol=1e-15)
    np.testing.assert_allclose(plus @ minus, np.zeros((2, 2)), atol=1e-15)


def test_closed_form_matches_state_vector():
    rng = np.random.default_rng(2024)
    for axis1, axis2 in rng.uniform(-math.pi, math.pi, size=(1000, 2)):
        closed = quantum.singlet_pair_distribution(axis1, axis2)
        reference = quantum.singlet_pair_distribution_from_state(axis1, axis2)
        np.testing.assert_allclose(closed.flat, reference.flat, rtol=0, atol=1e-12)


def test_bell_correlations_zero_angles():
    corr = quantum.bell_correlations(MeasurementSetup(0.0, 0.0))
    assert (corr.ab, corr.ac, corr.bc) == (1.0, -1.0, -1.0)
    assert (corr.a_prime_b, corr.a_a_prime) == (-1.0, -1.0)


def test_bell_correlations_conventional_optimum():
    corr = quantum.bell_correlations(MeasurementSetup(math.pi / 3, -math.pi / 3))
    assert corr.ab == pytest.approx(0.5)
    assert corr.ac == pytest.approx(-0.5)
    assert corr.bc == pytest.approx(0.5)


def test_bell_entropy_summary_entropic_optimum():
    summary = quantum.bell_entropy_summary(MeasurementSetup(ENTROPIC_THETA, ENTROPIC_PHI))
    assert (summary.h_a, summary.h_b, summary.h_c) == (1.0, 1.0, 1.0)
    assert summary.i_ab == pytest.approx(0.39169, abs=1e-4)
    assert summary.i_ac == pytest.approx(0.76291, abs=1e-4)
    assert summary.i_ac == summary.i_bc


def test_bell_entropy_summary_matches_pair_tables():
    # Pairwise mutual entropies from the explicit singlet tables.
    theta, phi = 1.1, -0.4
    summary = quantum.bell_entropy_summary(MeasurementSetup(theta, phi))
    # A is z on particle 1, read through A' (z on particle 2).
    a_prime_b = quantum.singlet_pair_distribution(theta, 0.0, labels=("B", "A'"))
    b_c = quantum.singlet_pair_distribution(theta, phi, labels=("B", "C"))
    a_c = quantum.singlet_pair_distribution(0.0, phi, labels=("A", "C"))
    assert summary.i_ab == pytest.approx(mutual_information(a_prime_b, "B", "A'"), abs=1e-12)
    assert summary.i_bc == pytest.approx(mutual_information(b_c, "B", "C"), abs=1e-12)
    assert summary.i_ac == pytest.approx(mutual_information(a_c, "A", "C"), abs=1e-12)


def test_chsh_mutual_entropies():
    i_apb, i_ac, i_bc, i_aap = quantum.chsh_mutual_entropies(
        MeasurementSetup(ENTROPIC_THETA, ENTROPIC_PHI)
    )
    assert i_aap == 1.0
    assert i_apb == pytest.approx(0.39169, abs=1e-4)
    assert i_ac == pytest.approx(i_bc)


def test_bell_entropy_summary_even():
    rng = np.random.default_rng(3)
    for theta, phi in rng.uniform(-3.0, 3.0, size=(1000, 2)):
        forward = quantum.bell_entropy_summary(MeasurementSetup(theta, phi))
        mirrored = quantum.bell_entropy_summary(MeasurementSetup(-theta, -phi))
        assert forward == mirrored


def test_singlet_pair_correlation():
    rng = np.random.default_rng(5)
    for axis1, axis2 in rng.uniform(-math.pi, math.pi, size=(1000, 2)):
        joint = quantum.singlet_pair_distribution(axis1, axis2)
        assert abs(probability.correlation(joint) + math.cos(axis1 - axis2)) <= 1e-12
