"""Exact solution toolkit for the spin-1/2 Ising-XXZ diamond chain
with one impurity plaquette: thermal entanglement, l1-norm coherence,
and teleportation fidelity from transfer-matrix closed forms."""

from .model import (
    ChainSpec,
    CouplingSet,
    ImpurityFactors,
    IsingSector,
    Thermal,
    boltzmann_factor,
    dimer_hamiltonian,
    dimer_spectrum,
    reference_energy,
)
from .transfer import (
    TransferSpectral,
    build_spectral,
    partition_finite,
    partition_finite_log,
    partition_thermo_log,
)
from .rdm import LocalOperator, XState, local_operator, rdm_finite, rdm_thermo
from .measures import (
    ThresholdSet,
    concurrence_general,
    concurrence_xstate,
    entanglement_margin,
    l1_coherence,
    threshold_temperatures,
)
from .teleport import (
    CLASSICAL_FIDELITY,
    InputState,
    TeleportOutput,
    average_fidelity,
    beats_classical,
    fidelity,
    output_concurrence,
    teleport_oracle,
    teleport_output,
)

__version__ = "0.1.0"

__all__ = [
    "ChainSpec",
    "CouplingSet",
    "ImpurityFactors",
    "IsingSector",
    "Thermal",
    "boltzmann_factor",
    "dimer_hamiltonian",
    "dimer_spectrum",
    "reference_energy",
    "TransferSpectral",
    "build_spectral",
    "partition_finite",
    "partition_finite_log",
    "partition_thermo_log",
    "LocalOperator",
    "XState",
    "local_operator",
    "rdm_finite",
    "rdm_thermo",
    "ThresholdSet",
    "concurrence_general",
    "concurrence_xstate",
    "entanglement_margin",
    "l1_coherence",
    "threshold_temperatures",
    "CLASSICAL_FIDELITY",
    "InputState",
    "TeleportOutput",
    "average_fidelity",
    "beats_classical",
    "fidelity",
    "output_concurrence",
    "teleport_oracle",
    "teleport_output",
    "__version__",
]
