"""Concurrence, l1-norm coherence, and threshold extraction."""

import numpy as np
import pytest

from diamondchain import (
    ChainSpec,
    Thermal,
    XState,
    concurrence_general,
    concurrence_xstate,
    entanglement_margin,
    l1_coherence,
    rdm_thermo,
    threshold_temperatures,
)

from conftest import random_chain, random_thermal, random_xstate

SINGLET = XState(0.0, 0.5, -0.5, 0.0)
MIXED = XState(0.25, 0.25, 0.0, 0.25)


def test_concurrence_anchor_states():
    assert concurrence_xstate(SINGLET) == 1.0
    assert concurrence_xstate(MIXED) == 0.0
    assert concurrence_xstate(XState(0.0, 0.5, 0.5, 0.0)) == 1.0


def test_concurrence_general_product_state():
    rho = np.zeros((4, 4))
    rho[0, 0] = 1.0
    assert concurrence_general(rho) == pytest.approx(0.0, abs=1e-12)


def test_concurrence_general_bell_state():
    ket = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0)
    assert concurrence_general(np.outer(ket, ket)) == pytest.approx(1.0, abs=1e-10)


def test_concurrence_general_rejects_invalid_input():
    bad = np.zeros((4, 4), dtype=complex)
    bad[0, 1] = 1.0  # not Hermitian
    bad[0, 0] = 1.0
    with pytest.raises(ValueError):
        concurrence_general(bad)
    with pytest.raises(ValueError):
        concurrence_general(np.eye(4))  # trace 4
    negative = np.diag([1.1, -0.1, 0.0, 0.0]).astype(complex)
    with pytest.raises(ValueError):
        concurrence_general(negative)
    with pytest.raises(ValueError):
        concurrence_general(np.eye(2) / 2.0)  # wrong shape


def test_xstate_formula_matches_general_wootters():
    rng = np.random.default_rng(103)
    for _ in range(500):
        x = random_xstate(rng)
        assert concurrence_xstate(x) == pytest.approx(
            concurrence_general(x.as_matrix()), abs=1e-10
        )


def test_l1_coherence_values_and_bound():
    assert l1_coherence(SINGLET) == 1.0
    assert l1_coherence(MIXED) == 0.0
    rng = np.random.default_rng(107)
    for _ in range(500):
        x = random_xstate(rng)
        off_diagonal_sum = np.abs(
            x.as_matrix() - np.diag(np.diag(x.as_matrix()))
        ).sum()
        assert l1_coherence(x) == pytest.approx(off_diagonal_sum, abs=1e-12)
        assert l1_coherence(x) >= concurrence_xstate(x)


def test_measures_stay_clamped_on_thermal_states():
    rng = np.random.default_rng(109)
    for _ in range(300):
        x = rdm_thermo(random_chain(rng), random_thermal(rng, 0.05, 10.0))
        c = concurrence_xstate(x)
        assert 0.0 <= c <= 1.0 + 1e-12
        assert 0.0 <= l1_coherence(x) <= 1.0 + 1e-12


def test_threshold_reentrant_strong_field():
    spec = ChainSpec.from_params(Delta=1.0, h=2.0, gamma=0.8, eta=-0.8)
    found = threshold_temperatures(spec, 0.01, 2.0)
    assert len(found.roots) == 2
    assert found.labels == ("D", "E", "D")
    assert found.roots[1] == pytest.approx(1.12, abs=0.03)
    assert all(b > a for a, b in zip(found.roots, found.roots[1:]))


def test_threshold_death_only_at_weak_field():
    spec = ChainSpec.from_params(Delta=1.0, h=0.5, gamma=0.8, eta=-0.8)
    found = threshold_temperatures(spec, 0.01, 2.0)
    assert len(found.roots) == 1
    assert found.labels == ("E", "D")


def test_threshold_empty_result_is_valid():
    # narrow window deep inside the entangled phase
    spec = ChainSpec.from_params(Delta=1.0, h=0.5, gamma=0.8, eta=-0.8)
    found = threshold_temperatures(spec, 0.02, 0.2, scan_points=50)
    assert found.roots == ()
    assert found.labels == ("E",)


def test_threshold_roots_match_dense_scan():
    # a 10x denser scan finds the same roots, and refinement is stable
    spec = ChainSpec.from_params(Delta=1.3, h=2.2, gamma=0.8, eta=-0.8)
    coarse = threshold_temperatures(spec, 0.01, 2.0, scan_points=200)
    dense = threshold_temperatures(spec, 0.01, 2.0, scan_points=2000)
    assert len(coarse.roots) == len(dense.roots)
    for a, b in zip(coarse.roots, dense.roots):
        assert a == pytest.approx(b, abs=2e-6)


def test_threshold_refinement_completeness():
    spec = ChainSpec.from_params(Delta=1.0, h=2.0, gamma=0.8, eta=-0.8)
    base = threshold_temperatures(spec, 0.01, 2.0, scan_points=1000)
    doubled = threshold_temperatures(spec, 0.01, 2.0, scan_points=2000)
    for root in base.roots:
        assert any(abs(root - other) < 2e-6 for other in doubled.roots)


def test_threshold_labels_follow_margin_sign():
    spec = ChainSpec.from_params(Delta=1.0, h=2.0, gamma=0.8, eta=-0.8)
    found = threshold_temperatures(spec, 0.01, 2.0)
    birth, death = found.roots
    mid = 0.5 * (birth + death)
    assert entanglement_margin(rdm_thermo(spec, Thermal(mid))) > 0.0
    assert entanglement_margin(rdm_thermo(spec, Thermal(1.9))) < 0.0


def test_threshold_input_validation():
    spec = ChainSpec.from_params()
    with pytest.raises(ValueError):
        threshold_temperatures(spec, 0.0, 1.0)
    with pytest.raises(ValueError):
        threshold_temperatures(spec, 1.0, 0.5)
    with pytest.raises(ValueError):
        threshold_temperatures(spec, 0.1, 1.0, scan_points=1)


def test_threshold_strict_mode_drops_activated_birth():
    # with no numerical-zero floor the exponentially activated low-T
    # entanglement counts as E, so only the death root remains
    spec = ChainSpec.from_params(Delta=1.0, h=2.0, gamma=0.8, eta=-0.8)
    strict = threshold_temperatures(spec, 0.01, 2.0, zero_floor=0.0)
    assert len(strict.roots) == 1
    assert strict.labels == ("E", "D")
