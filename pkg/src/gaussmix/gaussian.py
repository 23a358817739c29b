"""Single-mode Gaussian states described by their covariance matrix.

Convention: the vacuum covariance matrix is I/2, so the uncertainty
relation reads ``det(sigma) >= 1/4``. Half the literature uses vacuum = I;
every formula in this package assumes I/2. First moments are ignored
throughout (they do not affect correlations).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

VACUUM_DET = 0.25

# delta below -DELTA_CLAMP is treated as a genuinely unphysical input
DELTA_CLAMP = 1e-9


class PhysicalityError(ValueError):
    """Raised when a covariance matrix violates the uncertainty relation."""


@dataclass(frozen=True)
class SingleModeCM:
    """Symmetric 2x2 covariance matrix ``[[xx, xp], [xp, pp]]``."""

    xx: float
    xp: float
    pp: float

    @property
    def det(self) -> float:
        return self.xx * self.pp - self.xp * self.xp

    @property
    def trace(self) -> float:
        return self.xx + self.pp

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.xx, self.xp], [self.xp, self.pp]])

    @classmethod
    def from_matrix(cls, m) -> "SingleModeCM":
        m = np.asarray(m, dtype=float)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        if not np.isclose(m[0, 1], m[1, 0], rtol=1e-12, atol=1e-14):
            raise ValueError("covariance matrix must be symmetric")
        return cls(float(m[0, 0]), float(0.5 * (m[0, 1] + m[1, 0])), float(m[1, 1]))

    @classmethod
    def vacuum(cls) -> "SingleModeCM":
        return cls(0.5, 0.0, 0.5)

    @classmethod
    def thermal(cls, n: float) -> "SingleModeCM":
        if n < 0:
            raise ValueError(f"thermal photon number must be >= 0, got {n}")
        return cls(0.5 + n, 0.0, 0.5 + n)

    def scaled(self, k: float) -> "SingleModeCM":
        return SingleModeCM(k * self.xx, k * self.xp, k * self.pp)

    def __add__(self, other: "SingleModeCM") -> "SingleModeCM":
        return SingleModeCM(self.xx + other.xx, self.xp + other.xp, self.pp + other.pp)

    def __sub__(self, other: "SingleModeCM") -> "SingleModeCM":
        return SingleModeCM(self.xx - other.xx, self.xp - other.xp, self.pp - other.pp)


@dataclass(frozen=True)
class SqueezedThermalParams:
    """Rotated squeezed thermal state.

    Attributes:
        r: squeezing parameter, >= 0.
        theta: rotation of the squeezing axis in [0, pi). ``theta=0`` gives
            ``diag(e^{2r}, e^{-2r})`` (p squeezed), ``theta=pi/2`` the
            orthogonal ordering ``diag(e^{-2r}, e^{2r})``.
        n_state: thermal photons of the state itself; purity is
            ``1 / (1 + 2 n_state)``.
    """

    r: float = 0.0
    theta: float = 0.0
    n_state: float = 0.0

    def __post_init__(self):
        if not self.r >= 0:
            raise ValueError(f"squeezing r must be >= 0, got {self.r}")
        if not self.n_state >= 0:
            raise ValueError(f"n_state must be >= 0, got {self.n_state}")
        if not 0 <= self.theta < math.pi:
            raise ValueError(f"theta must lie in [0, pi), got {self.theta}")

    @property
    def purity(self) -> float:
        return 1.0 / (1.0 + 2.0 * self.n_state)


def make_cm(params: SqueezedThermalParams) -> SingleModeCM:
    """Build ``R(theta) diag(e^{2r}, e^{-2r}) R(theta)^T / (2 mu)``."""
    half = 0.5 * (1.0 + 2.0 * params.n_state)
    big = math.exp(2.0 * params.r)
    small = math.exp(-2.0 * params.r)
    c, s = math.cos(params.theta), math.sin(params.theta)
    xx = half * (c * c * big + s * s * small)
    pp = half * (s * s * big + c * c * small)
    xp = half * c * s * (big - small)
    return SingleModeCM(xx, xp, pp)


def squeezed(r: float, theta: float = 0.0, n_state: float = 0.0) -> SingleModeCM:
    """Shorthand for ``make_cm(SqueezedThermalParams(r, theta, n_state))``."""
    return make_cm(SqueezedThermalParams(r, theta, n_state))


def check_physical(cm: SingleModeCM, tol: float = 1e-12) -> bool:
    return cm.xx > 0 and cm.pp > 0 and cm.det >= VACUUM_DET - tol


def _require_physical(cm: SingleModeCM, tol: float = 1e-12) -> None:
    if not check_physical(cm, tol):
        raise PhysicalityError(f"non-physical covariance matrix {cm} (det={cm.det!r})")


def purity(cm: SingleModeCM, tol: float = 1e-12) -> float:
    """Purity ``Tr[rho^2] = 1 / (2 sqrt(det sigma))``, clipped to 1 for
    states within ``tol`` of the pure-state bound."""
    _require_physical(cm, tol)
    return min(1.0, 0.5 / math.sqrt(cm.det))


def fidelity(a: SingleModeCM, b: SingleModeCM) -> float:
    """Uhlmann fidelity of two zero-mean single-mode Gaussian states.

    ``F = 1 / (sqrt(Delta + delta) - sqrt(delta))`` with
    ``Delta = det(a + b)`` and ``delta = 4 (det a - 1/4)(det b - 1/4)``.
    The rationalised form ``(sqrt(Delta + delta) + sqrt(delta)) / Delta``
    is evaluated to avoid cancellation for strongly squeezed inputs.
    """
    _require_physical(a)
    _require_physical(b)
    big_delta = (a + b).det
    delta = 4.0 * (a.det - VACUUM_DET) * (b.det - VACUUM_DET)
    if delta < 0:
        if delta < -DELTA_CLAMP:
            raise PhysicalityError(f"negative delta={delta!r} for inputs {a}, {b}")
        delta = 0.0
    f = (math.sqrt(big_delta + delta) + math.sqrt(delta)) / big_delta
    return min(f, 1.0)
