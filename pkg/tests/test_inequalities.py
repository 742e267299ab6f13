import itertools
import math
from types import SimpleNamespace

import numpy as np
import pytest
from scipy.special import entr

from src import entropy, inequalities, probability, quantum
from src.errors import OUT_OF_RANGE, InvalidInputError
from src.types import (
    VIOLATION_TOLERANCE,
    CorrelationSet,
    MeasurementSetup,
    PairwiseEntropySummary,
)

from .conftest import ENTROPIC_LHS_STAR, ENTROPIC_PHI, ENTROPIC_THETA


def quantum_reports(theta: float, phi: float):
    setup = MeasurementSetup(theta, phi)
    reports = inequalities.evaluate_all(
        quantum.bell_correlations(setup),
        quantum.bell_entropy_summary(setup),
        quantum.chsh_mutual_entropies(setup),
    )
    return {r.id: r for r in reports}


def test_evaluate_all_order(uniform_triple):
    reports = inequalities.evaluate_all(
        probability.pair_correlations(uniform_triple), entropy.pairwise_summary(uniform_triple)
    )
    ids = [r.id for r in reports]
    assert ids == ["BELL1", "BELL2", "BELL3", "BELL_STD", "EBELL1", "EBELL2", "EBELL3", "EBELL_STD"]


def test_entropic_violation_without_conventional():
    reports = quantum_reports(ENTROPIC_THETA, ENTROPIC_PHI)
    assert reports["EBELL3"].violated
    assert reports["EBELL3"].lhs == pytest.approx(ENTROPIC_LHS_STAR, abs=1e-6)
    for id in ("BELL1", "BELL2", "BELL3", "BELL_STD"):
        assert not reports[id].violated, id


def test_conventional_violation_without_entropic():
    reports = quantum_reports(math.pi / 3, -math.pi / 3)
    assert reports["BELL2"].violated
    assert reports["BELL2"].lhs == pytest.approx(1.5, abs=1e-12)
    assert reports["BELL_STD"].violated
    for id in ("EBELL1", "EBELL2", "EBELL3", "EBELL_STD"):
        assert not reports[id].violated, id


def test_margin_sign():
    report = quantum_reports(ENTROPIC_THETA, ENTROPIC_PHI)["EBELL3"]
    assert report.margin == report.rhs - report.lhs
    assert report.margin < 0


def test_boundary_not_violated():
    # phi = 0: C is anti-aligned with A, EBELL3 sits exactly on the bound.
    for theta in np.linspace(0.1, 3.0, 15):
        reports = quantum_reports(float(theta), 0.0)
        assert reports["EBELL3"].lhs == 1.0
        assert not reports["EBELL3"].violated


def test_entropic_bell_uses_marginal_entropies():
    summary = PairwiseEntropySummary(h_a=0.5, h_b=0.9, h_c=0.7, i_ab=0.3, i_ac=0.4, i_bc=0.1)
    lhs = [r.lhs for r in inequalities.entropic_bell(summary)]
    rhs = [r.rhs for r in inequalities.entropic_bell(summary)]
    assert lhs == pytest.approx([0.6, 0.0, 0.2])
    assert rhs == [0.5, 0.9, 0.7]
    assert inequalities.entropic_bell(summary)[0].violated


def test_standard_bell():
    corr = CorrelationSet(ab=0.2, ac=-0.3, bc=0.4, a_prime_b=-0.2, a_a_prime=-1.0)
    report = inequalities.standard_bell(corr)
    assert report.lhs == pytest.approx(0.9)
    assert not report.violated


def test_entropic_chsh():
    report = inequalities.entropic_chsh(0.39169, 0.76291, 0.76291, 1.0)
    assert report.id == "ECHSH"
    assert report.lhs == pytest.approx(1.39169)
    assert report.rhs == 2.0
    assert not report.violated


def test_entropic_chsh_rejects_out_of_range():
    with pytest.raises(InvalidInputError) as err:
        inequalities.entropic_chsh(0.5, 1.5, 0.2, 1.0)
    assert err.value.code == OUT_OF_RANGE


def test_diagnose_negativity_at_entropic_optimum():
    summary = quantum.bell_entropy_summary(MeasurementSetup(ENTROPIC_THETA, ENTROPIC_PHI))
    diagnosis = inequalities.diagnose_negativity(summary)
    assert len(diagnosis.entries) == 1
    label, bound = diagnosis.entries[0]
    assert label == "H(C|AB)"
    assert bound == pytest.approx(1.0 - ENTROPIC_LHS_STAR, abs=1e-6)
    closed_form = (
        1
        + entropy.mutual_from_correlation(math.cos(ENTROPIC_THETA))
        - 2 * entropy.mutual_from_correlation(math.cos(ENTROPIC_THETA / 2))
    )
    assert bound == pytest.approx(closed_form, abs=1e-12)


def test_diagnosis_matches_violations():
    # A negative degree sum exactly when the matching inequality is violated.
    rng = np.random.default_rng(7)
    for theta, phi in rng.uniform(-math.pi, math.pi, size=(500, 2)):
        setup = MeasurementSetup.from_angles(theta, phi)
        summary = quantum.bell_entropy_summary(setup)
        violated = {r.id for r in inequalities.entropic_bell(summary) if r.violated}
        labels = {label for label, _ in inequalities.diagnose_negativity(summary).entries}
        expected = {
            label
            for label, id in zip(("H(A|BC)", "H(B|AC)", "H(C|AB)"), ("EBELL1", "EBELL2", "EBELL3"))
            if id in violated
        }
        assert labels == expected


def test_no_diagnosis_for_classical(xor_triple):
    assert inequalities.diagnose_negativity(entropy.pairwise_summary(xor_triple)).is_empty


def test_max_margin_ties_lowest_index():
    excess, index = inequalities.max_margin((1.0, 1.0, 0.5), (1.0, 1.0, 1.0))
    assert excess == 0.0
    assert index == 0
    excess, index = inequalities.max_margin(
        (np.array([0.0, 2.0]), np.array([1.0, 0.0]), np.array([0.0, 0.0])), (1.0, 1.0, 1.0)
    )
    np.testing.assert_array_equal(excess, [0.0, 1.0])
    np.testing.assert_array_equal(index, [1, 0])


def check_classical(seed: int) -> None:
    joint = probability.random_joint(seed, 3)
    corr = probability.pair_correlations(joint)
    summary = entropy.pairwise_summary(joint)
    reports = inequalities.evaluate_all(corr, summary, entropy.classical_chsh_entropies(summary))
    assert reports[-1].id == "ECHSH"
    assert not any(r.violated for r in reports), seed
    assert inequalities.diagnose_negativity(summary).is_empty
    diagram = entropy.ternary_diagram(joint)
    for key, value in diagram.to_dict().items():
        if key != "delta":
            assert value >= -1e-9, (seed, key)


def test_classical_soundness():
    for seed in range(2_000):
        check_classical(seed)



def batch_triples(seed: int, size: int) -> np.ndarray:
    """`size` random (2, 2, 2) tables, drawn the way random_joint draws one."""
    rng = np.random.default_rng(seed)
    draws = rng.uniform(np.nextafter(0.0, 1.0), 1.0, size=(size, 2, 2, 2))
    return draws / draws.sum(axis=(1, 2, 3), keepdims=True)


def batch_entropies(tables: np.ndarray) -> dict:
    """H of every subset of (A, B, C), one value per table, keyed like subset_entropies."""
    entropies = {}
    for k in range(1, 4):
        for keep in itertools.combinations(range(3), k):
            dropped = tuple(1 + axis for axis in range(3) if axis not in keep)
            marginal = tables.sum(axis=dropped) if dropped else tables
            bits = entr(marginal).reshape(len(tables), -1).sum(axis=1) / entropy.LN2
            entropies[frozenset("ABC"[axis] for axis in keep)] = bits
    return entropies


def batch_summary(h: dict) -> SimpleNamespace:
    a, b, c = (frozenset(v) for v in "ABC")
    return SimpleNamespace(
        h_a=h[a],
        h_b=h[b],
        h_c=h[c],
        i_ab=h[a] + h[b] - h[a | b],
        i_ac=h[a] + h[c] - h[a | c],
        i_bc=h[b] + h[c] - h[b | c],
    )


def batch_correlations(tables: np.ndarray):
    signs = np.array([1.0, -1.0])
    ab = np.einsum("i,j,nijk->n", signs, signs, tables)
    ac = np.einsum("i,k,nijk->n", signs, signs, tables)
    bc = np.einsum("j,k,nijk->n", signs, signs, tables)
    return ab, ac, bc


def test_batch_helpers_match_library():
    tables = batch_triples(11, 50)
    summary = batch_summary(batch_entropies(tables))
    ab, ac, bc = batch_correlations(tables)
    for n, table in enumerate(tables):
        joint = probability.make_joint(["A", "B", "C"], table)
        expected = entropy.pairwise_summary(joint)
        for key in ("h_a", "h_b", "h_c", "i_ab", "i_ac", "i_bc"):
            assert getattr(summary, key)[n] == pytest.approx(getattr(expected, key), abs=1e-12)
        corr = probability.pair_correlations(joint)
        assert (ab[n], ac[n], bc[n]) == pytest.approx((corr.ab, corr.ac, corr.bc), abs=1e-12)


def test_classical_soundness_full():
    tables = batch_triples(2024, 100_000)
    h = batch_entropies(tables)
    summary = batch_summary(h)
    ab, ac, bc = batch_correlations(tables)
    tol = VIOLATION_TOLERANCE

    for lhs in inequalities.conventional_lhs(ab, ac, bc):
        assert np.all(1.0 - lhs >= -tol)
    assert np.all(1.0 - (np.abs(ab - ac) + bc) >= -tol)

    s = summary
    rhs = (s.h_a, s.h_b, s.h_c)
    for lhs, bound in zip(inequalities.entropic_lhs(s.i_ab, s.i_ac, s.i_bc), rhs):
        assert np.all(bound - lhs >= -tol)
    assert np.all(1.0 - (np.abs(s.i_ab - s.i_ac) + s.i_bc) >= -tol)
    assert np.all(2.0 - (s.i_ab + (s.i_ac - s.i_bc) + s.h_a) >= -tol)
    for degree_sum in entropy.degree_sums(summary):
        assert np.all(degree_sum >= -tol)

    a, b, c = (frozenset(v) for v in "ABC")
    abc = a | b | c
    cells = (
        h[abc] - h[b | c],
        h[abc] - h[a | c],
        h[abc] - h[a | b],
        h[a | b] + h[a | c] - h[a] - h[abc],
        h[a | b] + h[b | c] - h[b] - h[abc],
        h[a | c] + h[b | c] - h[c] - h[abc],
    )
    for cell in cells:
        assert np.all(cell >= -1e-9)


def test_standard_entropic_implies_basic():
    # With 1-bit marginals, EBELL_STD is the larger of the EBELL2 and EBELL3 left-hand sides.
    rng = np.random.default_rng(20)
    summaries = [
        quantum.bell_entropy_summary(MeasurementSetup.from_angles(theta, phi))
        for theta, phi in rng.uniform(-math.pi, math.pi, size=(2000, 2))
    ]
    summaries += [
        PairwiseEntropySummary(h_a=1.0, h_b=1.0, h_c=1.0, i_ab=x, i_ac=y, i_bc=z)
        for x, y, z in rng.uniform(0.0, 1.0, size=(2000, 3))
    ]
    n_standard = 0
    for summary in summaries:
        if inequalities.entropic_bell_standard(summary).violated:
            n_standard += 1
            basic = {r.id: r.violated for r in inequalities.entropic_bell(summary)}
            assert basic["EBELL2"] or basic["EBELL3"], summary
    assert n_standard > 0
