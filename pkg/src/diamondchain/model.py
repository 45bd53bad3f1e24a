"""Plaquette-level physics of the Ising-XXZ diamond chain.

One unit cell couples an interstitial XXZ dimer (two qubits) to the two
nodal Ising spins that flank it.  Because the nodal spins commute with
everything, each cell block-diagonalizes by nodal sector and the dimer
spectrum is available in closed form.

Conventions
-----------
* Every energy, field, and temperature is dimensionless, measured in
  units of the host exchange J (J = 1 canonical).
* Qubit basis order is {|00>, |01>, |10>, |11>} with |0> the S^z = +1/2
  state, so |00> is the field-aligned dimer level.
* Boltzmann weights are computed relative to a caller-supplied energy
  shift ``e_ref``; :func:`reference_energy` provides the global minimum
  over all sectors of a chain, which keeps every exponent non-positive.
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "CouplingSet",
    "ImpurityFactors",
    "ChainSpec",
    "IsingSector",
    "Thermal",
    "SECTOR_PP",
    "SECTOR_PM",
    "SECTOR_MP",
    "SECTOR_MM",
    "SECTORS",
    "dimer_spectrum",
    "dimer_hamiltonian",
    "boltzmann_factor",
    "reference_energy",
]


@dataclass(frozen=True)
class CouplingSet:
    """Physical parameters of one plaquette.

    Attributes
    ----------
    J : float
        XX/YY exchange inside the dimer.
    Delta : float
        Dimensionless z-axis anisotropy of the dimer exchange.
    J1 : float
        Ising coupling between the dimer and its two nodal spins.
    h : float
        Longitudinal magnetic field.

    Any finite real values are legal; both ferro- and antiferromagnetic
    signs are meaningful.
    """

    J: float = 1.0
    Delta: float = 1.0
    J1: float = 1.0
    h: float = 0.0


@dataclass(frozen=True)
class ImpurityFactors:
    """Relative deviations of the impurity plaquette couplings.

    The impurity couplings are J(1+alpha), Delta(1+gamma), J1(1+eta);
    (0, 0, 0) reproduces the homogeneous chain exactly.
    """

    alpha: float = 0.0
    gamma: float = 0.0
    eta: float = 0.0


@dataclass(frozen=True)
class ChainSpec:
    """Host couplings plus the derived single-impurity plaquette."""

    host: CouplingSet
    factors: ImpurityFactors = ImpurityFactors()

    @property
    def impurity(self) -> CouplingSet:
        f = self.factors
        return CouplingSet(
            J=self.host.J * (1.0 + f.alpha),
            Delta=self.host.Delta * (1.0 + f.gamma),
            J1=self.host.J1 * (1.0 + f.eta),
            h=self.host.h,
        )

    def homogeneous(self) -> "ChainSpec":
        """The same chain with the impurity switched off."""
        return ChainSpec(host=self.host)

    @classmethod
    def from_params(
        cls,
        J: float = 1.0,
        Delta: float = 1.0,
        J1: float = 1.0,
        h: float = 0.0,
        alpha: float = 0.0,
        gamma: float = 0.0,
        eta: float = 0.0,
    ) -> "ChainSpec":
        return cls(
            host=CouplingSet(J=J, Delta=Delta, J1=J1, h=h),
            factors=ImpurityFactors(alpha=alpha, gamma=gamma, eta=eta),
        )


@dataclass(frozen=True)
class IsingSector:
    """Orientation (each +-1/2) of the two nodal spins flanking a dimer."""

    mu_left: float
    mu_right: float

    def __post_init__(self):
        if abs(self.mu_left) != 0.5 or abs(self.mu_right) != 0.5:
            raise ValueError("nodal spins must be +-1/2")

    @property
    def mu_sum(self) -> float:
        return self.mu_left + self.mu_right

    def flipped(self) -> "IsingSector":
        return IsingSector(-self.mu_left, -self.mu_right)


SECTOR_PP = IsingSector(0.5, 0.5)
SECTOR_PM = IsingSector(0.5, -0.5)
SECTOR_MP = IsingSector(-0.5, 0.5)
SECTOR_MM = IsingSector(-0.5, -0.5)
SECTORS = (SECTOR_PP, SECTOR_PM, SECTOR_MP, SECTOR_MM)


@dataclass(frozen=True)
class Thermal:
    """Temperature point, in units k_B T / J.  Finite T only."""

    T: float

    def __post_init__(self):
        if not math.isfinite(self.T) or self.T <= 0.0:
            raise ValueError(f"temperature must be positive and finite, got {self.T}")

    @property
    def beta(self) -> float:
        return 1.0 / self.T


def dimer_spectrum(c: CouplingSet, s: IsingSector) -> tuple[float, float, float, float]:
    """Closed-form dimer levels for a fixed nodal sector.

    Levels are indexed by their fixed eigenstates: 1 -> |00>, 2 -> the
    symmetric S^z = 0 state, 3 -> the singlet, 4 -> |11>.  The S^z = 0
    doublet carries no net moment, so it decouples from both J1 and the
    field acting on the dimer; its splitting is +-J/2.
    """
    m = s.mu_sum
    zz = c.J * c.Delta / 4.0
    e1 = zz + (c.J1 - c.h / 2.0) * m - c.h
    e2 = -zz + c.J / 2.0 - (c.h / 2.0) * m
    e3 = -zz - c.J / 2.0 - (c.h / 2.0) * m
    e4 = zz - (c.J1 + c.h / 2.0) * m + c.h
    return (e1, e2, e3, e4)


def dimer_hamiltonian(c: CouplingSet, s: IsingSector) -> np.ndarray:
    """Dense 4x4 plaquette Hamiltonian at fixed nodal sector.

    Oracle companion of :func:`dimer_spectrum`: its (sorted) eigenvalues
    must match the closed forms, and its eigenvectors are the fixed
    basis {|00>, (|01>+-|10>)/sqrt(2), |11>}.
    """
    m = s.mu_sum
    zz = c.J * c.Delta / 4.0
    hm = (c.h / 2.0) * m
    ham = np.zeros((4, 4))
    ham[0, 0] = zz + c.J1 * m - c.h - hm
    ham[1, 1] = -zz - hm
    ham[2, 2] = -zz - hm
    ham[3, 3] = zz - c.J1 * m + c.h - hm
    ham[1, 2] = ham[2, 1] = c.J / 2.0
    return ham


def boltzmann_factor(
    c: CouplingSet, s: IsingSector, t: Thermal, e_ref: float = 0.0
) -> float:
    """Sector weight w = sum_j exp(-beta (E_j - e_ref)).

    Summed with fsum so sectors sharing a level multiset (e.g. the two
    polarized sectors at zero field) give bitwise-equal weights.  Raises
    OverflowError if an exponent still exceeds the floating-point range
    after shifting.
    """
    beta = t.beta
    return math.fsum(math.exp(-beta * (e - e_ref)) for e in dimer_spectrum(c, s))


def reference_energy(spec: ChainSpec) -> float:
    """Global minimum energy over host and impurity, all nodal sectors.

    Using this as ``e_ref`` makes every Boltzmann exponent non-positive,
    so low-T evaluations can only underflow (harmlessly), never overflow.
    All physical outputs are ratios of weights and do not depend on the
    choice.
    """
    couplings = (spec.host, spec.impurity)
    return min(
        e for c in couplings for s in SECTORS for e in dimer_spectrum(c, s)
    )
