"""Two-mode covariance matrices produced by beam-splitter mixing."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gaussian import SingleModeCM, _require_physical


@dataclass(frozen=True, eq=False)
class TwoModeCM:
    """Block covariance matrix ``[[A, C], [C^T, B]]`` of two modes.

    ``c_block`` is a general (not necessarily symmetric) 2x2 array.
    """

    a_block: SingleModeCM
    b_block: SingleModeCM
    c_block: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.c_block, dtype=float)
        if c.shape != (2, 2):
            raise ValueError(f"c_block must be 2x2, got shape {c.shape}")
        object.__setattr__(self, "c_block", c)

    @classmethod
    def product(cls, a: SingleModeCM, b: SingleModeCM) -> "TwoModeCM":
        return cls(a, b, np.zeros((2, 2)))

    @classmethod
    def from_matrix(cls, m) -> "TwoModeCM":
        m = np.asarray(m, dtype=float)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        if not np.allclose(m, m.T, rtol=1e-12, atol=1e-14):
            raise ValueError("covariance matrix must be symmetric")
        return cls(
            SingleModeCM.from_matrix(m[:2, :2]),
            SingleModeCM.from_matrix(m[2:, 2:]),
            m[:2, 2:].copy(),
        )

    @property
    def matrix(self) -> np.ndarray:
        a, b, c = self.a_block.matrix, self.b_block.matrix, self.c_block
        return np.block([[a, c], [c.T, b]])

    @property
    def det_c(self) -> float:
        c = self.c_block
        return float(c[0, 0] * c[1, 1] - c[0, 1] * c[1, 0])

    @property
    def det(self) -> float:
        """Full 4x4 determinant via the Schur complement of ``A``."""
        a, b = self.a_block, self.b_block
        det_a = a.det
        if not det_a > 1e-12:
            return float(np.linalg.det(self.matrix))
        (c00, c01), (c10, c11) = self.c_block
        # adj(A) = [[pp, -xp], [-xp, xx]]; S = B - C^T adj(A) C / det A
        u00 = a.pp * c00 - a.xp * c10
        u01 = a.pp * c01 - a.xp * c11
        u10 = -a.xp * c00 + a.xx * c10
        u11 = -a.xp * c01 + a.xx * c11
        s00 = b.xx - (c00 * u00 + c10 * u10) / det_a
        s01 = b.xp - (c00 * u01 + c10 * u11) / det_a
        s10 = b.xp - (c01 * u00 + c11 * u10) / det_a
        s11 = b.pp - (c01 * u01 + c11 * u11) / det_a
        return det_a * (s00 * s11 - s01 * s10)

    def swapped(self) -> "TwoModeCM":
        return TwoModeCM(self.b_block, self.a_block, self.c_block.T.copy())


def mix(
    sigma_c: SingleModeCM,
    sigma_d: SingleModeCM,
    tau: float,
    *,
    literal_offdiag: bool = False,
) -> TwoModeCM:
    """Mix two uncorrelated modes at a beam splitter of transmissivity ``tau``.

    Output mode 1 carries the transmitted part of ``sigma_c``:
    ``A = tau sigma_c + (1 - tau) sigma_d``, ``B = tau sigma_d + (1 - tau) sigma_c``
    and ``C = sqrt(tau (1 - tau)) (sigma_d - sigma_c)``.

    ``literal_offdiag=True`` uses ``tau (1 - tau)`` instead of its square
    root. The two agree only at ``tau`` in ``{0, 1}``; elsewhere
    the literal form does not come from a unitary and may produce
    unphysical output. Kept for comparison only.
    """
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"beam-splitter transmissivity must lie in [0, 1], got {tau}")
    _require_physical(sigma_c)
    _require_physical(sigma_d)
    x = tau * (1.0 - tau)
    k = x if literal_offdiag else math.sqrt(x)
    a = sigma_c.scaled(tau) + sigma_d.scaled(1.0 - tau)
    b = sigma_d.scaled(tau) + sigma_c.scaled(1.0 - tau)
    diff = (sigma_d - sigma_c).scaled(k)
    c = np.array([[diff.xx, diff.xp], [diff.xp, diff.pp]])
    return TwoModeCM(a, b, c)
