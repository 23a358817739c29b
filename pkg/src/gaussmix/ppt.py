"""Partial-transpose (Simon) separability test for two-mode Gaussian states.

For one mode per party the PPT condition is necessary and sufficient:
the state is entangled iff the smallest symplectic eigenvalue of the
partially transposed covariance matrix is below 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gaussian import PhysicalityError
from .mixing import TwoModeCM

OMEGA_1 = np.array([[0.0, 1.0], [-1.0, 0.0]])
OMEGA_2 = np.block([[OMEGA_1, np.zeros((2, 2))], [np.zeros((2, 2)), OMEGA_1]])
# flips the momentum of mode 2
PARTIAL_TRANSPOSE = np.diag([1.0, 1.0, 1.0, -1.0])

# roundoff floor for the verdict: states built exactly at the uncertainty
# bound land at 1/2 - O(1e-16)
ENTANGLEMENT_TOL = 1e-12
# invariants lose accuracy to ~sqrt(eps) near a degenerate spectrum
_REFINE_BAND = 1e-6


@dataclass(frozen=True)
class PPTReport:
    nu_minus: float
    log_negativity: float
    entangled: bool


def _smallest_symplectic(seralian: float, det: float) -> float:
    """Smaller root of ``nu^4 - seralian nu^2 + det = 0``.

    ``nu_-^2 = 2 det / (seralian + sqrt(seralian^2 - 4 det))`` is the
    cancellation-free form of ``(seralian - sqrt(...)) / 2``.
    """
    disc = seralian * seralian - 4.0 * det
    if disc < 0:
        if disc < -1e-9 * max(1.0, seralian * seralian):
            raise PhysicalityError(
                f"no real symplectic spectrum (Delta={seralian!r}, det={det!r})"
            )
        disc = 0.0
    if det <= 0:
        raise PhysicalityError(f"covariance matrix is not positive definite (det={det!r})")
    return math.sqrt(2.0 * det / (seralian + math.sqrt(disc)))


def symplectic_eigenvalues(matrix) -> np.ndarray:
    """Symplectic spectrum of a positive-definite 4x4 covariance matrix.

    With ``M = L L^T`` (Cholesky), ``L^T (i Omega) L`` is Hermitian and has
    eigenvalues ``+-nu_k``. Unlike the closed-form invariants this stays
    accurate to machine precision when the spectrum is degenerate.
    """
    m = np.asarray(matrix, dtype=float)
    try:
        chol = np.linalg.cholesky(m)
    except np.linalg.LinAlgError as exc:
        raise PhysicalityError("covariance matrix is not positive definite") from exc
    herm = chol.T @ (1j * OMEGA_2) @ chol
    ev = np.linalg.eigvalsh(herm)
    return np.sort(ev[ev > 0]) if np.count_nonzero(ev > 0) == 2 else np.sort(np.abs(ev))[::2]


def ppt_check(cm: TwoModeCM, method: str = "invariants") -> PPTReport:
    """Smallest PT symplectic eigenvalue, log-negativity and verdict.

    ``method="eigen"`` diagonalises ``i Omega P Sigma P`` numerically
    instead of using the invariant ``det A + det B - 2 det C``.
    """
    if method == "invariants":
        seralian = cm.a_block.det + cm.b_block.det - 2.0 * cm.det_c
        nu = _smallest_symplectic(seralian, cm.det)
        if abs(nu - 0.5) < _REFINE_BAND:
            pt = PARTIAL_TRANSPOSE @ cm.matrix @ PARTIAL_TRANSPOSE
            nu = float(symplectic_eigenvalues(pt)[0])
    elif method == "eigen":
        pt = PARTIAL_TRANSPOSE @ cm.matrix @ PARTIAL_TRANSPOSE
        nu = float(symplectic_eigenvalues(pt)[0])
    else:
        raise ValueError(f"unknown method {method!r}")
    log_neg = max(0.0, -math.log(2.0 * nu))
    return PPTReport(nu_minus=nu, log_negativity=log_neg, entangled=nu < 0.5 - ENTANGLEMENT_TOL)


def two_mode_physical(cm: TwoModeCM, tol: float = 1e-10) -> bool:
    """True iff the smallest symplectic eigenvalue of ``cm`` is >= 1/2 - tol."""
    try:
        nu = symplectic_eigenvalues(cm.matrix)[0]
    except PhysicalityError:
        return False
    return bool(nu >= 0.5 - tol)
