"""Transfer-matrix solution of the decorated chain.

The nodal spins form a classical Ising ring once each dimer is traced
out, so the ring partition function reduces to a product of 2x2 transfer
matrices: one host matrix W for every regular cell and a single
impurity matrix for the defective cell.  Everything downstream needs
only the sector weights, the two eigenvalues of W, and the two
trace coefficients of the impurity matrix in W's eigenbasis.
"""

import math
from dataclasses import dataclass

import numpy as np

from .model import (
    ChainSpec,
    Thermal,
    SECTOR_PP,
    SECTOR_PM,
    SECTOR_MM,
    boltzmann_factor,
    reference_energy,
)

__all__ = [
    "TransferSpectral",
    "build_spectral",
    "sector_gap_split",
    "partition_finite",
    "partition_finite_log",
    "partition_thermo_log",
]


def sector_gap_split(w_pp: float, w_mm: float, w_pm: float) -> tuple[float, float]:
    """The pair disc +- (w_pp - w_mm), evaluated without cancellation.

    disc = sqrt((w_pp - w_mm)^2 + 4 w_pm^2) exceeds |w_pp - w_mm| by
    roughly 2 w_pm^2 / |w_pp - w_mm| in the polarized regime, far below
    float resolution of a direct subtraction; the small branch is
    therefore recovered from (disc + g)(disc - g) = 4 w_pm^2.  Both
    returned values are non-negative.
    """
    disc = math.hypot(w_pp - w_mm, 2.0 * w_pm)
    if disc <= 0.0:
        raise ValueError(
            "all transfer-matrix weights vanished; temperature too low "
            "to resolve for these couplings"
        )
    if w_pp == w_mm:
        # bitwise-equal branches keep zero-field symmetry exact
        return disc, disc
    if w_pp > w_mm:
        gap_plus = disc + (w_pp - w_mm)
        gap_minus = 4.0 * w_pm * w_pm / gap_plus
    else:
        gap_minus = disc + (w_mm - w_pp)
        gap_plus = 4.0 * w_pm * w_pm / gap_minus
    return gap_plus, gap_minus


@dataclass(frozen=True)
class TransferSpectral:
    """Spectral data of the host/impurity transfer-matrix pair.

    ``w_*`` are host sector weights, ``wi_*`` the impurity ones, indexed
    by the nodal-spin signs (pp / pm / mm; pm = mp by symmetry).
    ``lam_plus >= lam_minus`` are the host eigenvalues, ``disc`` the
    discriminant separating them, and ``coef_plus`` / ``coef_minus`` the
    weights multiplying lam^(N-1) in the ring trace with one impurity.
    ``e_ref`` records the energy shift baked into every weight.
    """

    w_pp: float
    w_pm: float
    w_mm: float
    wi_pp: float
    wi_pm: float
    wi_mm: float
    lam_plus: float
    lam_minus: float
    disc: float
    coef_plus: float
    coef_minus: float
    e_ref: float

    def host_matrix(self) -> np.ndarray:
        return np.array([[self.w_pp, self.w_pm], [self.w_pm, self.w_mm]])

    def impurity_matrix(self) -> np.ndarray:
        return np.array([[self.wi_pp, self.wi_pm], [self.wi_pm, self.wi_mm]])


def build_spectral(
    spec: ChainSpec, t: Thermal, e_ref: float | None = None
) -> TransferSpectral:
    """Sector weights, eigenvalues, and impurity trace coefficients.

    ``e_ref`` defaults to the global minimum energy of the chain; see
    :func:`diamondchain.model.reference_energy`.
    """
    if e_ref is None:
        e_ref = reference_energy(spec)

    w_pp = boltzmann_factor(spec.host, SECTOR_PP, t, e_ref)
    w_pm = boltzmann_factor(spec.host, SECTOR_PM, t, e_ref)
    w_mm = boltzmann_factor(spec.host, SECTOR_MM, t, e_ref)
    imp = spec.impurity
    wi_pp = boltzmann_factor(imp, SECTOR_PP, t, e_ref)
    wi_pm = boltzmann_factor(imp, SECTOR_PM, t, e_ref)
    wi_mm = boltzmann_factor(imp, SECTOR_MM, t, e_ref)

    # hypot form avoids cancellation when w_pp ~ w_mm
    disc = math.hypot(w_pp - w_mm, 2.0 * w_pm)
    lam_plus = (w_pp + w_mm + disc) / 2.0
    lam_minus = (w_pp + w_mm - disc) / 2.0

    # grouping by impurity sector keeps every product sign-definite
    gap_plus, gap_minus = sector_gap_split(w_pp, w_mm, w_pm)
    cross = 4.0 * w_pm * wi_pm
    coef_plus = (gap_plus * wi_pp + gap_minus * wi_mm + cross) / (2.0 * disc)
    coef_minus = (gap_minus * wi_pp + gap_plus * wi_mm - cross) / (2.0 * disc)

    return TransferSpectral(
        w_pp=w_pp,
        w_pm=w_pm,
        w_mm=w_mm,
        wi_pp=wi_pp,
        wi_pm=wi_pm,
        wi_mm=wi_mm,
        lam_plus=lam_plus,
        lam_minus=lam_minus,
        disc=disc,
        coef_plus=coef_plus,
        coef_minus=coef_minus,
        e_ref=e_ref,
    )


def _check_cell_count(n_cells: int) -> None:
    if not isinstance(n_cells, (int, np.integer)) or n_cells < 2:
        raise ValueError(f"cell count must be an integer >= 2, got {n_cells!r}")


def partition_finite(sp: TransferSpectral, n_cells: int) -> float:
    """Ring partition function with one impurity cell, raw value.

    Valid while (N-1) ln lam_plus stays inside the floating-point range;
    an OverflowError propagates otherwise (use the log variants then).
    The value is in shifted units: the physical Z carries an extra
    exp(beta N e_ref) which cancels in every density-operator ratio.
    """
    _check_cell_count(n_cells)
    return (
        sp.coef_plus * sp.lam_plus ** (n_cells - 1)
        + sp.coef_minus * sp.lam_minus ** (n_cells - 1)
    )


def partition_finite_log(sp: TransferSpectral, n_cells: int) -> float:
    """ln Z_N evaluated stably for any cell count."""
    _check_cell_count(n_cells)
    ratio = sp.lam_minus / sp.lam_plus
    tail = sp.coef_plus + sp.coef_minus * ratio ** (n_cells - 1)
    return (n_cells - 1) * math.log(sp.lam_plus) + math.log(tail)


def partition_thermo_log(sp: TransferSpectral) -> tuple[float, float]:
    """(ln lam_plus, ln coef_plus): thermodynamic-limit partition data.

    ln Z_N = ln coef_plus + (N-1) ln lam_plus once the subleading
    eigenvalue is negligible.  Requires a strictly dominant eigenvalue,
    which Perron-Frobenius guarantees for any T > 0.
    """
    if not sp.lam_plus > sp.lam_minus:
        raise ValueError("degenerate transfer eigenvalues; cannot occur for T > 0")
    return (math.log(sp.lam_plus), math.log(sp.coef_plus))
