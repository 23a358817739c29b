"""Lossy channels coupled to a (possibly squeezed) thermal bath.

A channel of transmission ``T`` acts on a single-mode covariance matrix as
``sigma -> T sigma + (1 - T) sigma_inf``, where ``sigma_inf`` is the
stationary covariance matrix fixed by the bath. This is the same map as a
beam splitter of transmissivity ``T`` whose unused port carries the bath
state. Two-mode propagation is two independent single-mode channels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gaussian import SingleModeCM, _require_physical, purity


@dataclass(frozen=True)
class ChannelSpec:
    """Transmission ``T = exp(-Gamma t)`` and bath parameters.

    ``m_bath`` is the complex bath squeezing; positivity requires
    ``|m_bath|^2 <= n_bath (1 + n_bath)``.
    """

    transmission: float = 1.0
    n_bath: float = 0.0
    m_bath: complex = 0j

    def __post_init__(self):
        if not 0.0 <= self.transmission <= 1.0:
            raise ValueError(f"transmission must lie in [0, 1], got {self.transmission}")
        if not self.n_bath >= 0:
            raise ValueError(f"n_bath must be >= 0, got {self.n_bath}")
        bound = self.n_bath * (1.0 + self.n_bath)
        if abs(self.m_bath) ** 2 > bound * (1 + 1e-12) + 1e-15:
            raise ValueError(
                f"|m_bath|^2 = {abs(self.m_bath) ** 2} exceeds n_bath (1 + n_bath) = {bound}"
            )

    @classmethod
    def lossy(cls, transmission: float) -> "ChannelSpec":
        return cls(transmission)

    @classmethod
    def thermal(cls, transmission: float, n_bath: float) -> "ChannelSpec":
        return cls(transmission, n_bath)


def asymptotic_cm(ch: ChannelSpec) -> SingleModeCM:
    m = complex(ch.m_bath)
    diag = 0.5 + ch.n_bath
    return SingleModeCM(diag + m.real, m.imag, diag - m.real)


def evolve(cm: SingleModeCM, ch: ChannelSpec) -> SingleModeCM:
    _require_physical(cm)
    t = ch.transmission
    if t == 1.0:
        return cm
    inf = asymptotic_cm(ch)
    return SingleModeCM(
        t * cm.xx + (1.0 - t) * inf.xx,
        t * cm.xp + (1.0 - t) * inf.xp,
        t * cm.pp + (1.0 - t) * inf.pp,
    )


def thermal_photons_from_purity(cm: SingleModeCM) -> float:
    """Effective thermal photon number ``(1/mu - 1) / 2`` of a state."""
    return 0.5 * (1.0 / purity(cm) - 1.0)
