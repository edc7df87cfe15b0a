"""Dense complex Hermitian linear algebra for 4x4 battery states.

Everything here operates on plain ``numpy`` arrays of ``complex128``. The
battery Hilbert space is fixed at dimension 4 (two two-level emitters), so
robustness and determinism matter far more than asymptotic cost: eigenvectors
are post-processed into a reproducible phase gauge, and the matrix exponential
is a straightforward scaling-and-squaring routine that doubles as an
independent cross-check for the closed-form expressions elsewhere in the
package.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

HERMITICITY_TOL = 1e-10
UNITARITY_TOL = 1e-10


class NonHermitianInput(ValueError):
    """Matrix handed to an eigensolver deviates from M = M^dagger."""


class NonUnitaryInput(ValueError):
    """Matrix handed to a conjugation deviates from U U^dagger = I."""


class EigenSystem4(NamedTuple):
    """Eigendecomposition of a Hermitian matrix.

    ``values`` are real and ascending; column ``i`` of ``vectors`` is the
    orthonormal eigenvector paired with ``values[i]``.
    """

    values: np.ndarray
    vectors: np.ndarray


def _as_complex(matrix) -> np.ndarray:
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def hermiticity_defect(matrix) -> float:
    """Max entrywise deviation from Hermitian symmetry."""
    m = _as_complex(matrix)
    return float(np.max(np.abs(m - m.conj().T)))


def fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Rotate each column so its largest-magnitude entry is real positive.

    Ties in magnitude resolve to the first (lowest-index) entry, which makes
    the gauge deterministic and keeps golden eigenvector tests meaningful.
    """
    fixed = np.array(vectors, dtype=complex)
    for j in range(fixed.shape[1]):
        k = int(np.argmax(np.abs(fixed[:, j])))
        pivot = fixed[k, j]
        if abs(pivot) > 0.0:
            fixed[:, j] *= pivot.conjugate() / abs(pivot)
    return fixed


def hermitian_eig(matrix) -> EigenSystem4:
    """Eigendecompose a Hermitian matrix into a deterministic gauge.

    Uses the direct LAPACK solver on the Hermitian average (M + M^dagger)/2,
    then applies :func:`fix_phases`. Output is identical for identical input.

    Raises:
        NonHermitianInput: if the Hermiticity defect exceeds 1e-10.
    """
    m = _as_complex(matrix)
    defect = hermiticity_defect(m)
    if defect > HERMITICITY_TOL:
        raise NonHermitianInput(
            f"matrix is not Hermitian: max |M - M^dagger| = {defect:.3e}"
        )
    values, vectors = np.linalg.eigh((m + m.conj().T) / 2.0)
    return EigenSystem4(values=values.real, vectors=fix_phases(vectors))


def conjugate(unitary, rho) -> np.ndarray:
    """Return U rho U^dagger for a unitary U.

    Spectrum and trace of ``rho`` are preserved to floating-point accuracy.

    Raises:
        NonUnitaryInput: if max |U U^dagger - I| exceeds 1e-10.
    """
    u = _as_complex(unitary)
    defect = float(np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0]))))
    if defect > UNITARITY_TOL:
        raise NonUnitaryInput(
            f"matrix is not unitary: max |U U^dagger - I| = {defect:.3e}"
        )
    r = _as_complex(rho)
    return u @ r @ u.conj().T


def matrix_exp(matrix) -> np.ndarray:
    """Dense matrix exponential by scaling and squaring.

    The argument is halved until its 1-norm is at most 0.5, the exponential
    of the scaled matrix is summed as a Taylor series truncated at order 24
    (the order-25 term of a matrix with 1-norm 0.5 is below 2e-42, far under
    unit roundoff of the partial sum), and the result is squared back up.
    Accurate to ~1e-12 relative for 1-norms up to a few hundred; this is the
    numeric reference the closed-form unitary and thermal-state expressions
    are tested against.
    """
    a = _as_complex(matrix)
    norm = float(np.linalg.norm(a, 1))
    squarings = 0
    if norm > 0.5:
        squarings = int(np.ceil(np.log2(norm / 0.5)))
        a = a / (2.0**squarings)

    n = a.shape[0]
    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, 25):
        term = term @ a / k
        result = result + term
        if float(np.max(np.abs(term))) < 1e-18:
            break
    for _ in range(squarings):
        result = result @ result
    return result


def validate_density(rho, tol: float) -> list[str]:
    """Check the defining properties of a density matrix.

    Returns a list of human-readable violations; an empty list means ``rho``
    is Hermitian, has unit trace, and is positive semidefinite, all within
    ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    r = _as_complex(rho)
    violations = []
    if not np.all(np.isfinite(r)):
        return ["matrix contains non-finite entries"]
    defect = hermiticity_defect(r)
    if defect > tol:
        violations.append(f"not Hermitian: max |M - M^dagger| = {defect:.3e}")
    trace_gap = abs(complex(np.trace(r)) - 1.0)
    if trace_gap > tol:
        violations.append(f"trace differs from 1 by {trace_gap:.3e}")
    smallest = float(np.min(np.linalg.eigvalsh((r + r.conj().T) / 2.0)))
    if smallest < -tol:
        violations.append(f"not positive semidefinite: min eigenvalue = {smallest:.3e}")
    return violations
