"""Brute-force enumeration against the transfer-matrix route."""

import numpy as np
import pytest

from diamondchain import (
    ChainSpec,
    Thermal,
    build_spectral,
    partition_finite,
    rdm_finite,
    rdm_thermo,
)
from diamondchain.oracle import enumerate_partition, enumerate_rdm

from conftest import random_chain, random_thermal, xstate_diff


def test_enumeration_counts_microstates_at_infinite_temperature():
    z = enumerate_partition(ChainSpec.from_params(), Thermal(1e12), 4)
    assert z == pytest.approx(8.0**4, rel=1e-6)


def test_enumeration_rejects_bad_sizes():
    spec = ChainSpec.from_params()
    t = Thermal(1.0)
    with pytest.raises(ValueError):
        enumerate_partition(spec, t, 13)
    with pytest.raises(ValueError):
        enumerate_partition(spec, t, 1)
    with pytest.raises(ValueError):
        enumerate_rdm(spec, t, 13)
    with pytest.raises(ValueError):
        enumerate_rdm(spec, t, 5, cell_index=6)


def test_partition_translation_invariance():
    rng = np.random.default_rng(179)
    spec = random_chain(rng)
    t = random_thermal(rng)
    z2 = enumerate_partition(spec, t, 5, cell_index=2)
    z3 = enumerate_partition(spec, t, 5, cell_index=3)
    assert z2 == pytest.approx(z3, rel=1e-12)


def test_partition_matches_transfer_route():
    rng = np.random.default_rng(181)
    for _ in range(30):
        spec = random_chain(rng)
        t = random_thermal(rng)
        n = int(rng.integers(2, 7))
        z_transfer = partition_finite(build_spectral(spec, t), n)
        z_brute = enumerate_partition(spec, t, n, cell_index=int(rng.integers(1, n + 1)))
        assert z_transfer == pytest.approx(z_brute, rel=1e-10)


def test_rdm_matches_similarity_transform_route():
    rng = np.random.default_rng(191)
    for _ in range(30):
        spec = random_chain(rng)
        t = random_thermal(rng)
        n = int(rng.integers(2, 7))
        r = int(rng.integers(1, n + 1))
        assert xstate_diff(rdm_finite(spec, t, n, r), enumerate_rdm(spec, t, n, r)) < 1e-10


def test_rdm_two_cells_exhaustive():
    rng = np.random.default_rng(193)
    for _ in range(20):
        spec = random_chain(rng)
        t = random_thermal(rng)
        assert xstate_diff(rdm_finite(spec, t, 2), enumerate_rdm(spec, t, 2)) < 1e-10


def test_rdm_infinite_temperature_maximally_mixed():
    x = enumerate_rdm(ChainSpec.from_params(), Thermal(1e12), 3)
    assert x.rho11 == pytest.approx(0.25, abs=1e-9)
    assert x.rho22 == pytest.approx(0.25, abs=1e-9)
    assert x.rho23 == pytest.approx(0.0, abs=1e-9)
    assert x.rho44 == pytest.approx(0.25, abs=1e-9)


def test_homogeneous_ring_approaches_thermodynamic_limit():
    spec = ChainSpec(host=ChainSpec.from_params(Delta=1.4, h=0.6).host)
    t = Thermal(1.0)
    finite_tail = xstate_diff(enumerate_rdm(spec, t, 10), rdm_thermo(spec, t))
    assert finite_tail < 1e-3
