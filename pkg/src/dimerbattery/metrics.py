"""Resource-theoretic performance metrics for the dimer battery.

All quantities derive from one spectral recipe: diagonalize the battery
Hamiltonian (energies ascending) and the state (populations as needed), then
re-pair populations with energy levels.

    passive state   populations descending on ascending energies; the
                    cheapest arrangement of the given spectrum
    active state    populations ascending on ascending energies; the most
                    expensive arrangement
    ergotropy       Tr[(rho - passive) H]  >= 0, maximal unitary work output
    anti-ergotropy  Tr[(rho - active) H]   <= 0, the (signed) gap to the
                    fully charged arrangement; its magnitude is the maximal
                    unitary energy injection, exposed as injection_cost
    capacity        ergotropy - anti-ergotropy = Tr[active H] - Tr[passive H],
                    invariant under any unitary on the state

Sign convention: anti-ergotropy is kept as the literal trace difference and
is therefore non-positive, which makes capacity = ergotropy - anti_ergotropy
hold as an identity. Charging power is the tau-derivative of ergotropy along
the driven trajectory, by central finite differences.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .charging import evolve
from .linalg import EigenSystem4, hermitian_eig
from .model import DimerParams, hamiltonian


class NegativeTau(ValueError):
    """Dimensionless time must be non-negative."""


class ZeroTime(ValueError):
    """Average power is undefined at tau <= 0."""


@dataclass(frozen=True)
class MetricsSample:
    """One point of a charging sweep. ``None`` marks a metric not computed

    (or, for avg_power, undefined at tau = 0).
    """

    tau: float
    ergotropy: float | None = None
    anti_ergotropy: float | None = None
    capacity: float | None = None
    power: float | None = None
    avg_power: float | None = None
    coherence_l1: float | None = None


def _rearranged(rho, hamiltonian_matrix, populations_descending: bool) -> np.ndarray:
    h_sys = hermitian_eig(hamiltonian_matrix)
    populations = hermitian_eig(rho).values  # ascending
    if populations_descending:
        populations = populations[::-1]
    vectors = h_sys.vectors
    return (vectors * populations) @ vectors.conj().T


def passive_state(rho, hamiltonian_matrix) -> np.ndarray:
    """Cheapest unitary rearrangement of rho's spectrum over H's levels.

    Minimizes Tr[U rho U^dagger H] over all unitaries U; same spectrum as rho.
    """
    return _rearranged(rho, hamiltonian_matrix, populations_descending=True)


def active_state(rho, hamiltonian_matrix) -> np.ndarray:
    """Most expensive unitary rearrangement: top populations on top energies."""
    return _rearranged(rho, hamiltonian_matrix, populations_descending=False)


def ergotropy(rho, hamiltonian_matrix) -> float:
    """Maximal unitary work output, Tr[(rho - passive) H], clamped at 0.

    The trace difference is non-negative up to roundoff; the clamp only
    removes O(1e-15) noise for states that are already passive.
    """
    gap = np.trace((rho - passive_state(rho, hamiltonian_matrix)) @ hamiltonian_matrix)
    return max(0.0, float(gap.real))


def anti_ergotropy(rho, hamiltonian_matrix) -> float:
    """Signed gap to the fully charged arrangement, Tr[(rho - active) H] <= 0."""
    gap = np.trace((rho - active_state(rho, hamiltonian_matrix)) @ hamiltonian_matrix)
    return float(gap.real)


def injection_cost(rho, hamiltonian_matrix) -> float:
    """Maximal unitary energy injection, |anti-ergotropy|."""
    return max(0.0, -anti_ergotropy(rho, hamiltonian_matrix))


def capacity(rho, hamiltonian_matrix) -> float:
    """Energy window between the active and passive arrangements.

    Equals ergotropy - anti_ergotropy and does not change when rho is
    conjugated by any unitary, since only the spectrum enters.
    """
    return ergotropy(rho, hamiltonian_matrix) - anti_ergotropy(rho, hamiltonian_matrix)


def l1_coherence(rho, basis: EigenSystem4) -> float:
    """Sum of |<phi_i| rho |phi_j>| over i != j in the given eigenbasis.

    With the battery's energy eigenbasis this is the coherence that the
    drive generates on top of the (diagonal) thermal state.
    """
    vectors = basis.vectors
    represented = vectors.conj().T @ np.asarray(rho, dtype=complex) @ vectors
    magnitudes = np.abs(represented)
    return float(np.sum(magnitudes) - np.sum(np.diag(magnitudes)))


def l1_coherence_computational(rho) -> float:
    """Coherence in the bare product basis, for exploration."""
    magnitudes = np.abs(np.asarray(rho, dtype=complex))
    return float(np.sum(magnitudes) - np.sum(np.diag(magnitudes)))


def has_degenerate_populations(rho, gap_tol: float = 1e-8) -> bool:
    """Flag (near-)crossings in the sorted population spectrum.

    Ergotropy is only piecewise smooth in parameters: where two populations
    cross, the passive re-pairing switches branches. Finite-difference
    consistency checks should be skipped near such points.
    """
    populations = np.sort(np.linalg.eigvalsh(np.asarray(rho, dtype=complex)))
    return bool(np.min(np.diff(populations)) < gap_tol)


def _ergotropy_at(params: DimerParams, tau: float) -> float:
    return ergotropy(evolve(params, tau), hamiltonian(params))


def instantaneous_power(params: DimerParams, tau: float, step: float = 1e-5) -> float:
    """Charging power dE/dtau by second-order finite differences.

    Central difference away from the origin; a one-sided second-order
    stencil keeps the evaluation inside tau >= 0 when tau < step. Negative
    values are physical and mark energy flowing back out of the battery.

    Raises:
        NegativeTau: if tau < 0.
    """
    if step <= 0:
        raise ValueError("step must be > 0")
    if tau < 0:
        raise NegativeTau(f"tau must be >= 0, got {tau}")
    if tau - step < 0:
        e0 = _ergotropy_at(params, tau)
        e1 = _ergotropy_at(params, tau + step)
        e2 = _ergotropy_at(params, tau + 2.0 * step)
        return (-3.0 * e0 + 4.0 * e1 - e2) / (2.0 * step)
    e_plus = _ergotropy_at(params, tau + step)
    e_minus = _ergotropy_at(params, tau - step)
    return (e_plus - e_minus) / (2.0 * step)


def average_power(params: DimerParams, tau: float) -> float:
    """Ergotropy accumulated per unit dimensionless time, E(tau) / tau.

    Raises:
        ZeroTime: if tau <= 0.
    """
    if tau <= 0:
        raise ZeroTime(f"average power requires tau > 0, got {tau}")
    return _ergotropy_at(params, tau) / tau
