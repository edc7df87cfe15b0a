"""Physical model of a dipole-dipole coupled two-emitter dimer.

Two two-level emitters with transition frequencies nu1 = nu0 + delta/2 and
nu2 = nu0 - delta/2 exchange excitations through a coherent coupling v12. In
the product basis ``{|00>, |01>, |10>, |11>}`` the dimer Hamiltonian is

    [[-nu0,      0,        0,      0],
     [   0, -delta/2,     v12,     0],
     [   0,     v12,   delta/2,    0],
     [   0,       0,        0,  nu0]]

with the exact spectrum (-nu0, -alpha/2, +alpha/2, +nu0) where
alpha = sqrt(delta^2 + 4 v12^2). Everything is expressed in reduced units:
hbar = k_B = 1, so frequencies, couplings and temperature share one unit.

The thermal state is built from its closed-form matrix elements; the numeric
matrix exponential in :mod:`dimerbattery.linalg` serves as an independent
cross-check in the test suite only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import EigenSystem4, fix_phases, matrix_exp


class DegenerateGeometry(ValueError):
    """Scaled separation is (numerically) zero, where the coupling formulas blow up."""


@dataclass(frozen=True)
class DimerParams:
    """Physical configuration of the dimer, reduced units.

    nu0:          mean transition frequency, (nu1 + nu2) / 2, must be > 0
    delta:        detuning nu1 - nu2 (may have either sign)
    v12:          coherent dipole-dipole coupling
    temperature:  equilibrium temperature, must be > 0
    """

    nu0: float
    delta: float
    v12: float
    temperature: float

    def __post_init__(self):
        for name in ("nu0", "delta", "v12", "temperature"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.nu0 <= 0:
            raise ValueError(f"nu0 must be > 0, got {self.nu0}")
        if self.temperature <= 0:
            raise ValueError(f"temperature must be > 0, got {self.temperature}")

    @property
    def nu1(self) -> float:
        return self.nu0 + self.delta / 2.0

    @property
    def nu2(self) -> float:
        return self.nu0 - self.delta / 2.0

    @property
    def alpha(self) -> float:
        """Splitting of the single-excitation doublet, sqrt(delta^2 + 4 v12^2)."""
        return math.hypot(self.delta, 2.0 * self.v12)

    @classmethod
    def from_site_frequencies(
        cls, nu1: float, nu2: float, v12: float, temperature: float
    ) -> "DimerParams":
        return cls(
            nu0=(nu1 + nu2) / 2.0,
            delta=nu1 - nu2,
            v12=v12,
            temperature=temperature,
        )


@dataclass(frozen=True)
class GeometryConfig:
    """Dipole orientations and separation feeding the coupling formulas.

    n1_hat, n2_hat:  unit transition-dipole orientations
    u12_hat:         unit vector along the separation axis
    z12:             dimensionless scaled distance (refractive index times
                     wavenumber times physical separation), must be > 0
    lambda1/2:       single-emitter spontaneous emission rates, > 0
    """

    n1_hat: tuple[float, float, float]
    n2_hat: tuple[float, float, float]
    u12_hat: tuple[float, float, float]
    z12: float
    lambda1: float
    lambda2: float

    def __post_init__(self):
        for name in ("n1_hat", "n2_hat", "u12_hat"):
            vec = np.asarray(getattr(self, name), dtype=float)
            object.__setattr__(self, name, tuple(vec))
            if vec.shape != (3,):
                raise ValueError(f"{name} must be a 3-vector")
            if abs(np.linalg.norm(vec) - 1.0) > 1e-12:
                raise ValueError(f"{name} must have unit norm within 1e-12")
        if not self.z12 > 0:
            raise ValueError("z12 must be > 0")
        if not (self.lambda1 > 0 and self.lambda2 > 0):
            raise ValueError("emission rates must be > 0")


@dataclass(frozen=True)
class AnalyticSpectrum:
    """Closed-form eigensystem of the dimer Hamiltonian.

    ``energies`` keeps the natural labelling (-nu0, -alpha/2, +alpha/2, +nu0),
    which is not globally sorted once alpha/2 exceeds nu0. Column ``i`` of
    ``states`` is the eigenvector for ``energies[i]``.
    """

    energies: np.ndarray
    states: np.ndarray
    alpha: float


def emission_rate(omega: float, dipole_sq: float, n_refr: float, prefactor: float) -> float:
    """Single-emitter spontaneous emission rate, cubic in the frequency.

    ``prefactor`` bundles the vacuum constants (1 / 3 eps0 hbar c^3 in SI);
    keeping it explicit keeps the library unit-agnostic.
    """
    return prefactor * n_refr * omega**3 * dipole_sq


def coupling_from_geometry(geometry: GeometryConfig) -> tuple[float, float]:
    """Evaluate the coherent coupling v12 and collective decay rate lambda12.

    Both follow from the retarded dipole-dipole Green function; the scaled
    distance z12 sets near-zone (z12 << 1, v12 ~ 1/z12^3) versus far-zone
    behaviour. Returns ``(v12, lambda12)``.

    Raises:
        DegenerateGeometry: if z12 < 1e-12 (formulas are singular at contact).
    """
    if geometry.z12 < 1e-12:
        raise DegenerateGeometry("z12 is numerically zero; coupling formulas diverge")

    n1 = np.asarray(geometry.n1_hat)
    n2 = np.asarray(geometry.n2_hat)
    u = np.asarray(geometry.u12_hat)
    nn = float(n1 @ n2)
    proj = float(n1 @ u) * float(n2 @ u)
    z = geometry.z12
    rate_scale = math.sqrt(geometry.lambda1 * geometry.lambda2)

    sin_z, cos_z = math.sin(z), math.cos(z)
    lambda12 = 1.5 * rate_scale * (
        (nn - proj) * sin_z / z
        + (nn - 3.0 * proj) * (cos_z / z**2 - sin_z / z**3)
    )
    v12 = 0.75 * rate_scale * (
        (proj - nn) * cos_z / z
        + (nn - 3.0 * proj) * (cos_z / z**3 + sin_z / z**2)
    )
    return v12, lambda12


def hamiltonian(params: DimerParams) -> np.ndarray:
    """Dimer Hamiltonian in the product basis; Hermitian and traceless."""
    h = np.zeros((4, 4), dtype=complex)
    h[0, 0] = -params.nu0
    h[1, 1] = -params.delta / 2.0
    h[2, 2] = params.delta / 2.0
    h[3, 3] = params.nu0
    h[1, 2] = params.v12
    h[2, 1] = params.v12
    return h


def analytic_spectrum(params: DimerParams) -> AnalyticSpectrum:
    """Closed-form eigensystem of :func:`hamiltonian`.

    The doubly excited and ground states are product states; the central
    doublet mixes |01> and |10> with amplitudes determined by delta and v12
    (symmetric/antisymmetric Bell states on resonance). For |v12| < 1e-14 the
    doublet falls back to the product pair ordered so the v12 -> 0 limit is
    continuous. Eigenvector phases follow :func:`dimerbattery.linalg.fix_phases`.
    """
    alpha = params.alpha
    energies = np.array(
        [-params.nu0, -alpha / 2.0, alpha / 2.0, params.nu0], dtype=float
    )
    states = np.zeros((4, 4), dtype=complex)
    states[0, 0] = 1.0
    states[3, 3] = 1.0

    if abs(params.v12) < 1e-14:
        # Product limit: |01> carries energy -delta/2, which is the lower
        # doublet level for delta >= 0 and the upper one otherwise.
        if params.delta >= 0:
            states[1, 1] = 1.0
            states[2, 2] = 1.0
        else:
            states[2, 1] = 1.0
            states[1, 2] = 1.0
        return AnalyticSpectrum(energies=energies, states=states, alpha=alpha)

    # |01> amplitudes of the doublet, written in whichever of the two
    # algebraically equal forms avoids cancellation of alpha against delta.
    if params.delta >= 0:
        c_minus = -(params.delta + alpha) / (2.0 * params.v12)
        c_plus = 2.0 * params.v12 / (alpha + params.delta)
    else:
        c_minus = -2.0 * params.v12 / (alpha - params.delta)
        c_plus = (alpha - params.delta) / (2.0 * params.v12)

    lower = np.array([0.0, c_minus, 1.0, 0.0], dtype=complex)
    upper = np.array([0.0, c_plus, 1.0, 0.0], dtype=complex)
    states[:, 1] = lower / np.linalg.norm(lower)
    states[:, 2] = upper / np.linalg.norm(upper)
    return AnalyticSpectrum(energies=energies, states=fix_phases(states), alpha=alpha)


def energy_eigenbasis(params: DimerParams) -> EigenSystem4:
    """Analytic spectrum repackaged with ascending energies.

    Convenience for metric evaluations that want an ``EigenSystem4``; sorting
    matters once alpha/2 > nu0 swaps the outer and inner levels.
    """
    spectrum = analytic_spectrum(params)
    order = np.argsort(spectrum.energies, kind="stable")
    return EigenSystem4(
        values=spectrum.energies[order], vectors=spectrum.states[:, order]
    )


def _sinh_ratio(alpha: float, temperature: float) -> float:
    """sinh(alpha / 2T) / alpha, with its alpha -> 0 limit 1 / 2T."""
    if alpha == 0.0:
        return 1.0 / (2.0 * temperature)
    return math.sinh(alpha / (2.0 * temperature)) / alpha


def partition_function(params: DimerParams) -> float:
    """Canonical partition function; always exceeds 4 for finite arguments."""
    t = params.temperature
    return 2.0 * (math.cosh(params.nu0 / t) + math.cosh(params.alpha / (2.0 * t)))


def gibbs_state(params: DimerParams) -> np.ndarray:
    """Thermal equilibrium state from its closed-form matrix elements.

    Only the single-excitation block carries an off-diagonal element; it is
    proportional to -v12 (so non-positive for v12 > 0) and vanishes for an
    uncoupled dimer. Agrees entrywise with exp(-H/T)/Z.
    """
    t = params.temperature
    z = partition_function(params)
    alpha = params.alpha
    sinh_ratio = _sinh_ratio(alpha, t)
    cosh_alpha = math.cosh(alpha / (2.0 * t))

    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = math.exp(params.nu0 / t) / z
    rho[1, 1] = (params.delta * sinh_ratio + cosh_alpha) / z
    rho[2, 2] = (-params.delta * sinh_ratio + cosh_alpha) / z
    rho[3, 3] = math.exp(-params.nu0 / t) / z
    coherence = -2.0 * params.v12 * sinh_ratio / z
    rho[1, 2] = coherence
    rho[2, 1] = coherence
    return rho


def gibbs_state_numeric(params: DimerParams) -> np.ndarray:
    """Trace-normalized exp(-H/T) via the dense exponential; test oracle."""
    weights = matrix_exp(-hamiltonian(params) / params.temperature)
    return weights / complex(np.trace(weights)).real
