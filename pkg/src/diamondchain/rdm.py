"""Reduced density operator of the impurity dimer.

The thermal two-qubit state of the impurity dimer keeps the X form of
the cell operator: diagonal (rho11, rho22, rho22, rho44) plus one real
off-diagonal rho23 between |01> and |10>.  Two routes are provided:

* :func:`rdm_thermo` -- branch-free closed form in the thermodynamic
  limit; the production path for sweeps.
* :func:`rdm_finite` -- similarity-transform trace for an N-cell ring;
  used for validation and small-N studies.

The homogeneous ("no impurity") dimer operator is the same code path
with zero impurity factors.
"""

import math
from dataclasses import dataclass

import numpy as np

from .model import (
    ChainSpec,
    CouplingSet,
    IsingSector,
    Thermal,
    SECTOR_PP,
    SECTOR_PM,
    SECTOR_MM,
    dimer_spectrum,
    reference_energy,
)
from .transfer import build_spectral, sector_gap_split

__all__ = ["LocalOperator", "XState", "local_operator", "rdm_thermo", "rdm_finite"]


@dataclass(frozen=True)
class LocalOperator:
    """Boltzmann-weighted dimer operator elements at fixed nodal sector.

    r22 +- r23 are the bare weights of the symmetric/singlet levels, so
    r22 > 0 and |r23| <= r22 always; r11 + 2 r22 + r44 reproduces the
    sector weight w.
    """

    r11: float
    r22: float
    r23: float
    r44: float

    @property
    def trace(self) -> float:
        return self.r11 + 2.0 * self.r22 + self.r44


@dataclass(frozen=True)
class XState:
    """X-form two-qubit density operator (rho14 = 0, degenerate middle)."""

    rho11: float
    rho22: float
    rho23: float
    rho44: float

    @property
    def trace(self) -> float:
        return self.rho11 + 2.0 * self.rho22 + self.rho44

    def as_matrix(self) -> np.ndarray:
        """Embed into the full 4x4 matrix, basis {|00>,|01>,|10>,|11>}."""
        return np.array(
            [
                [self.rho11, 0.0, 0.0, 0.0],
                [0.0, self.rho22, self.rho23, 0.0],
                [0.0, self.rho23, self.rho22, 0.0],
                [0.0, 0.0, 0.0, self.rho44],
            ]
        )

    def validate(self, atol: float = 1e-10) -> "XState":
        """Check unit trace and positivity; returns self for chaining."""
        if abs(self.trace - 1.0) > atol:
            raise ValueError(f"trace {self.trace} deviates from 1")
        if self.rho11 < -atol or self.rho44 < -atol:
            raise ValueError("negative population")
        if abs(self.rho23) > self.rho22 + atol:
            raise ValueError("off-diagonal exceeds middle population")
        return self


def local_operator(
    c: CouplingSet, s: IsingSector, t: Thermal, e_ref: float = 0.0
) -> LocalOperator:
    """Dimer thermal operator e^{-beta(H - e_ref)} in its fixed eigenbasis."""
    beta = t.beta
    e1, e2, e3, e4 = dimer_spectrum(c, s)
    p2 = math.exp(-beta * (e2 - e_ref))
    p3 = math.exp(-beta * (e3 - e_ref))
    return LocalOperator(
        r11=math.exp(-beta * (e1 - e_ref)),
        r22=(p2 + p3) / 2.0,
        r23=(p2 - p3) / 2.0,
        r44=math.exp(-beta * (e4 - e_ref)),
    )


def _impurity_sector_ops(
    spec: ChainSpec, t: Thermal, e_ref: float
) -> tuple[LocalOperator, LocalOperator, LocalOperator]:
    imp = spec.impurity
    return (
        local_operator(imp, SECTOR_PP, t, e_ref),
        local_operator(imp, SECTOR_PM, t, e_ref),
        local_operator(imp, SECTOR_MM, t, e_ref),
    )


def rdm_thermo(spec: ChainSpec, t: Thermal, e_ref: float | None = None) -> XState:
    """Impurity-dimer reduced density operator, N -> infinity closed form.

    Each element is (A + B) / M built from sector weights and the sector
    operator elements; the result is independent of ``e_ref`` because
    numerator and denominator scale identically.  The sum A + B is
    evaluated grouped per sector so that deeply polarized points (one
    sector weight dwarfing the others) do not cancel catastrophically.
    """
    if e_ref is None:
        e_ref = reference_energy(spec)
    sp = build_spectral(spec, t, e_ref)
    op_pp, op_pm, op_mm = _impurity_sector_ops(spec, t, e_ref)

    gap_plus, gap_minus = sector_gap_split(sp.w_pp, sp.w_mm, sp.w_pm)
    norm = gap_plus * sp.wi_pp + gap_minus * sp.wi_mm + 4.0 * sp.w_pm * sp.wi_pm
    if norm <= 0.0:
        raise ValueError(
            "trace normalization vanished; temperature too low to resolve "
            "for these couplings"
        )

    def element(x_pp: float, x_pm: float, x_mm: float) -> float:
        return (gap_plus * x_pp + gap_minus * x_mm + 4.0 * sp.w_pm * x_pm) / norm

    return XState(
        rho11=element(op_pp.r11, op_pm.r11, op_mm.r11),
        rho22=element(op_pp.r22, op_pm.r22, op_mm.r22),
        rho23=element(op_pp.r23, op_pm.r23, op_mm.r23),
        rho44=element(op_pp.r44, op_pm.r44, op_mm.r44),
    )


def rdm_finite(
    spec: ChainSpec,
    t: Thermal,
    n_cells: int,
    cell_index: int = 1,
    e_ref: float | None = None,
) -> XState:
    """Impurity-dimer reduced density operator on an N-cell ring.

    ``cell_index`` locates the impurity (1-based); by trace cyclicity the
    result does not depend on it.  Converges to :func:`rdm_thermo`
    geometrically, with ratio lam_minus / lam_plus per added cell.
    """
    if not isinstance(n_cells, (int, np.integer)) or n_cells < 2:
        raise ValueError(f"cell count must be an integer >= 2, got {n_cells!r}")
    if not 1 <= cell_index <= n_cells:
        raise ValueError(f"impurity cell index {cell_index} outside 1..{n_cells}")

    if e_ref is None:
        e_ref = reference_energy(spec)
    sp = build_spectral(spec, t, e_ref)
    if not sp.lam_plus > sp.lam_minus:
        raise ValueError("degenerate transfer eigenvalues; cannot occur for T > 0")
    op_pp, op_pm, op_mm = _impurity_sector_ops(spec, t, e_ref)

    # eigenbasis of the host matrix and its inverse, in closed form;
    # lam_plus - w_mm = gap_plus / 2 and lam_minus - w_mm = -gap_minus / 2
    gap_plus, gap_minus = sector_gap_split(sp.w_pp, sp.w_mm, sp.w_pm)
    u = np.array(
        [
            [gap_plus / 2.0, -gap_minus / 2.0],
            [sp.w_pm, sp.w_pm],
        ]
    )
    u_inv = (
        np.array(
            [
                [1.0, (gap_minus / 2.0) / sp.w_pm],
                [-1.0, (gap_plus / 2.0) / sp.w_pm],
            ]
        )
        / sp.disc
    )

    # everything scaled by lam_plus^(N-1) to stay in range for large N
    ratio = (sp.lam_minus / sp.lam_plus) ** (n_cells - 1)
    denom = sp.coef_plus + sp.coef_minus * ratio

    def element(x_pp: float, x_pm: float, x_mm: float) -> float:
        proj = np.array([[x_pp, x_pm], [x_pm, x_mm]])
        rotated = u_inv @ proj @ u
        return (rotated[0, 0] + rotated[1, 1] * ratio) / denom

    return XState(
        rho11=element(op_pp.r11, op_pm.r11, op_mm.r11),
        rho22=element(op_pp.r22, op_pm.r22, op_mm.r22),
        rho23=element(op_pp.r23, op_pm.r23, op_mm.r23),
        rho44=element(op_pp.r44, op_pm.r44, op_mm.r44),
    )
