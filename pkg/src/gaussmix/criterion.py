"""Fidelity threshold for entanglement generation at a beam splitter.

Two uncorrelated single-mode Gaussian states with purities ``mu_c``,
``mu_d`` mixed at a beam splitter of transmissivity ``tau`` produce an
entangled pair iff their fidelity is strictly below

    F_th = 4 mu_c mu_d sqrt(x) / (sqrt(g_- + 4 x g_+) - sqrt(4 x g_-)),

with ``x = tau (1 - tau)`` and ``g_+- = (1 +- mu_c^2)(1 +- mu_d^2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.optimize import bisect

from .gaussian import SingleModeCM, fidelity, purity

CurveFn = Callable[[float], "tuple[float, float]"]


def threshold(mu_c: float, mu_d: float, tau: float) -> Optional[float]:
    """Threshold fidelity, or ``None`` when ``tau`` is 0 or 1 (no mixing)."""
    for name, mu in (("mu_c", mu_c), ("mu_d", mu_d)):
        if not 0.0 < mu <= 1.0:
            raise ValueError(f"{name} must lie in (0, 1], got {mu}")
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau}")
    if tau == 0.0 or tau == 1.0:
        return None
    x = tau * (1.0 - tau)
    mc2, md2 = mu_c * mu_c, mu_d * mu_d
    g_minus = (1.0 - mc2) * (1.0 - md2)
    g_plus = (1.0 + mc2) * (1.0 + md2)
    root_hi = math.sqrt(g_minus + 4.0 * x * g_plus)
    root_lo = math.sqrt(4.0 * x * g_minus)
    # (g_- + 4x g_+) - 4x g_- = g_- + 8x (mu_c^2 + mu_d^2); avoids cancellation
    denom = (g_minus + 8.0 * x * (mc2 + md2)) / (root_hi + root_lo)
    return 4.0 * mu_c * mu_d * math.sqrt(x) / denom


@dataclass(frozen=True)
class CriterionVerdict:
    f_cd: float
    f_th: Optional[float]
    entangled_predicted: bool
    margin: Optional[float]

    @property
    def applicable(self) -> bool:
        return self.f_th is not None


def assess(sigma_c: SingleModeCM, sigma_d: SingleModeCM, tau: float) -> CriterionVerdict:
    f_cd = fidelity(sigma_c, sigma_d)
    f_th = threshold(purity(sigma_c), purity(sigma_d), tau)
    if f_th is None:
        return CriterionVerdict(f_cd, None, False, None)
    # strict: identical pure states sit at f_cd == f_th == 1 and stay separable
    return CriterionVerdict(f_cd, f_th, f_cd < f_th, f_th - f_cd)


def find_crossings(
    fn: Callable[[float], float],
    grid,
    xtol: float = 1e-10,
) -> list[float]:
    """All sign changes of ``fn`` on ``grid``, each refined by bisection.

    Exact zeros at grid nodes are reported as roots. Returned ascending.
    """
    grid = np.asarray(grid, dtype=float)
    values = np.array([fn(t) for t in grid])
    roots = []
    for i in range(len(grid) - 1):
        lo, hi = values[i], values[i + 1]
        if lo == 0.0:
            if i == 0 or np.sign(values[i - 1]) != np.sign(hi):
                roots.append(float(grid[i]))
            continue
        if lo * hi < 0:
            roots.append(float(bisect(fn, grid[i], grid[i + 1], xtol=xtol)))
    if values[-1] == 0.0 and len(grid) > 1 and values[-2] != 0.0:
        roots.append(float(grid[-1]))
    return roots


def critical_transmission_of(
    curve: CurveFn,
    n_grid: int = 1024,
    xtol: float = 1e-10,
) -> Optional[float]:
    """Largest ``T`` in (0, 1] where ``f_cd(T) - f_th(T)`` changes sign.

    ``curve`` maps a channel transmission to ``(f_cd, f_th)``. The grid
    excludes ``T = 0``, where loss-only scenarios degenerate to two vacua
    with ``f_cd == f_th``. Returns ``None`` when there is no crossing.
    """
    def gap(t: float) -> float:
        f_cd, f_th = curve(t)
        return f_cd - f_th

    grid = np.linspace(0.0, 1.0, n_grid + 1)[1:]
    roots = find_crossings(gap, grid, xtol=xtol)
    return max(roots) if roots else None


def critical_transmission_asymptote(n_th: float) -> float:
    """Large-squeezing limit of the critical transmission as quoted in the
    source, ``1 - (sqrt(1 + N (2 + 9N)) - 1 + N) / (2N (1 + 2N))``.

    Coincides with the model limit :func:`critical_transmission_limit`
    only at ``N = 1``.
    """
    if n_th < 0:
        raise ValueError(f"n_th must be >= 0, got {n_th}")
    if n_th == 0:
        return 0.0
    n = n_th
    return 1.0 - (math.sqrt(1.0 + n * (2.0 + 9.0 * n)) - 1.0 + n) / (2.0 * n * (1.0 + 2.0 * n))


def critical_transmission_limit(n_th: float) -> float:
    """Large-squeezing limit ``1 - 1/sqrt(1 + 2N)`` of the symmetric-thermal
    critical transmission.

    As ``r -> inf`` the smallest partially transposed symplectic eigenvalue
    tends to ``(1 - T) sqrt((1 + 2N)) / 2``, which crosses 1/2 here.
    """
    if n_th < 0:
        raise ValueError(f"n_th must be >= 0, got {n_th}")
    return 1.0 - 1.0 / math.sqrt(1.0 + 2.0 * n_th)
