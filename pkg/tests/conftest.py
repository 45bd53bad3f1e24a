"""Shared random-draw helpers for the test suite."""

import numpy as np

from diamondchain import ChainSpec, InputState, Thermal, XState


def random_chain(rng: np.random.Generator, h: float | None = None) -> ChainSpec:
    """A chain with unrestricted coupling signs and generic impurity factors."""
    return ChainSpec.from_params(
        J=rng.uniform(-2.0, 2.0),
        Delta=rng.uniform(-2.5, 2.5),
        J1=rng.uniform(-2.0, 2.0),
        h=rng.uniform(-3.0, 3.0) if h is None else h,
        alpha=rng.uniform(-0.9, 1.5),
        gamma=rng.uniform(-0.9, 1.5),
        eta=rng.uniform(-0.9, 1.5),
    )


def random_thermal(rng: np.random.Generator, lo: float = 0.2, hi: float = 5.0) -> Thermal:
    return Thermal(float(rng.uniform(lo, hi)))


def random_xstate(rng: np.random.Generator) -> XState:
    """A valid X state: positive diagonal, unit trace, |rho23| <= rho22."""
    p11, mid, p44 = rng.dirichlet((1.0, 1.0, 1.0))
    r22 = mid / 2.0
    return XState(float(p11), float(r22), float(rng.uniform(-r22, r22)), float(p44))


def random_input(rng: np.random.Generator) -> InputState:
    return InputState(
        float(rng.uniform(0.0, np.pi)),
        float(rng.uniform(0.0, 2.0 * np.pi * (1.0 - 1e-12))),
    )


def xstate_diff(a: XState, b: XState) -> float:
    return max(
        abs(a.rho11 - b.rho11),
        abs(a.rho22 - b.rho22),
        abs(a.rho23 - b.rho23),
        abs(a.rho44 - b.rho44),
    )
