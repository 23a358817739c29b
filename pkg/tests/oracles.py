"""Independent reference computations for the test-suite.

None of these reuse the closed forms in ``gaussmix``: states are built as
truncated Fock-space density matrices, covariance matrices are read off
numerically, and fidelities come from the Uhlmann definition.
"""

import math

import mpmath
import numpy as np
from scipy.linalg import expm

DIM = 140


def _ladder(dim=DIM):
    return np.diag(np.sqrt(np.arange(1, dim)), k=1)


def fock_state(r, theta, n_th, dim=DIM):
    """Rotated squeezed thermal density matrix ``U S rho_th S^dag U^dag``."""
    a = _ladder(dim)
    ad = a.conj().T
    k = np.arange(dim)
    rho = np.diag(n_th**k / (1.0 + n_th) ** (k + 1)) if n_th > 0 else np.diag((k == 0).astype(float))
    s = expm(0.5 * r * (a @ a - ad @ ad))
    u = np.diag(np.exp(-1j * theta * k))
    rho = u @ s @ rho @ s.conj().T @ u.conj().T
    return rho / np.trace(rho).real


def fock_cm(rho, dim=DIM):
    """Covariance matrix in the vacuum = I/2 convention, zero means assumed."""
    a = _ladder(dim)
    x = (a + a.conj().T) / math.sqrt(2)
    p = (a - a.conj().T) / (1j * math.sqrt(2))
    xx = np.trace(rho @ x @ x).real
    pp = np.trace(rho @ p @ p).real
    xp = np.trace(rho @ (x @ p + p @ x)).real / 2
    return xx, xp, pp


def _psd_sqrt(m):
    w, v = np.linalg.eigh(0.5 * (m + m.conj().T))
    return (v * np.sqrt(np.clip(w, 0, None))) @ v.conj().T


def uhlmann_fidelity(rho, sigma):
    """``(Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2``."""
    s = _psd_sqrt(rho)
    w = np.linalg.eigvalsh(s @ sigma @ s)
    return float(np.sum(np.sqrt(np.clip(w, 0, None))) ** 2)


def symplectic_spectrum(matrix):
    """Symplectic eigenvalues of a 2n x 2n matrix from ``eig(i Omega M)``."""
    m = np.asarray(matrix, dtype=float)
    n = m.shape[0] // 2
    omega = np.kron(np.eye(n), np.array([[0.0, 1.0], [-1.0, 0.0]]))
    return np.sort(np.abs(np.linalg.eigvals(1j * omega @ m)))[::2]


def bs_symplectic(tau):
    """Beam-splitter symplectic on (x1, p1, x2, p2)."""
    t, s = math.sqrt(tau), math.sqrt(1 - tau)
    i2 = np.eye(2)
    return np.block([[t * i2, s * i2], [-s * i2, t * i2]])


def threshold_mp(mu_c, mu_d, tau, dps=50):
    with mpmath.workdps(dps):
        mu_c, mu_d, tau = mpmath.mpf(mu_c), mpmath.mpf(mu_d), mpmath.mpf(tau)
        x = tau * (1 - tau)
        gm = (1 - mu_c**2) * (1 - mu_d**2)
        gp = (1 + mu_c**2) * (1 + mu_d**2)
        return 4 * mu_c * mu_d * mpmath.sqrt(x) / (mpmath.sqrt(gm + 4 * x * gp) - mpmath.sqrt(4 * x * gm))
