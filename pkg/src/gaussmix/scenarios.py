"""Channel scenarios preceding the beam splitter, sweeps and CSV output.

Every scenario starts from two pure, orthogonally squeezed ancestors
``sigma_c(0) = diag(e^{2r}, e^{-2r}) / 2`` and
``sigma_d(0) = diag(e^{-2r}, e^{2r}) / 2`` and sends each through its own
channel before mixing:

=========================  ===================  =============================
kind                       mode c               mode d
=========================  ===================  =============================
symmetric                  loss ``T``           loss ``T``
symmetric-thermal          loss ``T``           loss ``T`` + bath ``n_th``
asymmetric-ratio           loss ``T``           loss ``ratio * T``
fully-asymmetric           untouched            loss ``T``
fully-asymmetric-thermal   untouched            loss ``T`` + bath ``n_th``
=========================  ===================  =============================
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, replace
from enum import Enum
from typing import Iterable, Optional, Sequence

import numpy as np

from .channels import ChannelSpec, evolve
from .criterion import assess, critical_transmission_of
from .gaussian import SingleModeCM, squeezed
from .mixing import mix
from .ppt import ppt_check


class Kind(str, Enum):
    SYMMETRIC = "symmetric"
    SYMMETRIC_THERMAL = "symmetric-thermal"
    ASYMMETRIC_RATIO = "asymmetric-ratio"
    FULLY_ASYMMETRIC = "fully-asymmetric"
    FULLY_ASYMMETRIC_THERMAL = "fully-asymmetric-thermal"

    @property
    def thermal(self) -> bool:
        return self in (Kind.SYMMETRIC_THERMAL, Kind.FULLY_ASYMMETRIC_THERMAL)


@dataclass(frozen=True)
class ScenarioSpec:
    kind: Kind
    r: float
    tau: float = 0.5
    n_th: float = 0.0
    ratio: float = 0.9
    literal_offdiag: bool = False

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if not self.r >= 0:
            raise ValueError(f"r must be >= 0, got {self.r}")
        if not 0.0 < self.tau < 1.0:
            raise ValueError(f"tau must lie in (0, 1), got {self.tau}")
        if not self.n_th >= 0:
            raise ValueError(f"n_th must be >= 0, got {self.n_th}")
        if self.n_th > 0 and not self.kind.thermal:
            raise ValueError(f"scenario {self.kind.value!r} has no thermal bath (n_th={self.n_th})")
        if not 0.0 <= self.ratio <= 1.0:
            raise ValueError(f"ratio must lie in [0, 1], got {self.ratio}")


def ancestors(r: float) -> tuple[SingleModeCM, SingleModeCM]:
    return squeezed(r, 0.0), squeezed(r, math.pi / 2)


def states(spec: ScenarioSpec, t: float) -> tuple[SingleModeCM, SingleModeCM]:
    """Covariance matrices of modes c and d as they reach the beam splitter."""
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"transmission must lie in [0, 1], got {t}")
    c0, d0 = ancestors(spec.r)
    kind = spec.kind
    if kind in (Kind.FULLY_ASYMMETRIC, Kind.FULLY_ASYMMETRIC_THERMAL):
        sigma_c = c0
    else:
        sigma_c = evolve(c0, ChannelSpec(t))
    t_d = spec.ratio * t if kind is Kind.ASYMMETRIC_RATIO else t
    sigma_d = evolve(d0, ChannelSpec(t_d, n_bath=spec.n_th if kind.thermal else 0.0))
    return sigma_c, sigma_d


def curves(spec: ScenarioSpec, t: float) -> tuple[float, float]:
    """``(f_cd, f_th)`` at channel transmission ``t``."""
    verdict = assess(*states(spec, t), spec.tau)
    return verdict.f_cd, verdict.f_th


def critical_transmission(
    spec: ScenarioSpec,
    r: Optional[float] = None,
    n_th: Optional[float] = None,
    n_grid: int = 1024,
    xtol: float = 1e-10,
) -> Optional[float]:
    """Largest transmission at which the scenario's fidelity meets the
    threshold; ``None`` if entanglement survives at every ``T``.

    ``r`` and ``n_th`` override the values stored in ``spec``.
    """
    overrides = {k: v for k, v in (("r", r), ("n_th", n_th)) if v is not None}
    if overrides:
        spec = replace(spec, **overrides)
    return critical_transmission_of(lambda t: curves(spec, t), n_grid=n_grid, xtol=xtol)


@dataclass(frozen=True)
class SweepRow:
    t: float
    f_cd: float
    f_th: float
    entangled_pred: bool
    nu_minus: float
    entangled_oracle: bool

    @property
    def margin(self) -> float:
        return self.f_th - self.f_cd


def evaluate_row(
    abscissa: float,
    sigma_c: SingleModeCM,
    sigma_d: SingleModeCM,
    tau: float,
    literal_offdiag: bool = False,
) -> SweepRow:
    verdict = assess(sigma_c, sigma_d, tau)
    report = ppt_check(mix(sigma_c, sigma_d, tau, literal_offdiag=literal_offdiag))
    return SweepRow(
        abscissa,
        verdict.f_cd,
        verdict.f_th,
        verdict.entangled_predicted,
        report.nu_minus,
        report.entangled,
    )


def transmission_grid(n: int = 201, tmin: float = 0.005, tmax: float = 1.0) -> np.ndarray:
    if n < 2:
        raise ValueError(f"grid needs at least 2 points, got {n}")
    if not 0.0 <= tmin < tmax <= 1.0:
        raise ValueError(f"need 0 <= tmin < tmax <= 1, got [{tmin}, {tmax}]")
    return np.linspace(tmin, tmax, n)


def sweep(spec: ScenarioSpec, grid: Optional[Iterable[float]] = None) -> list[SweepRow]:
    grid = transmission_grid() if grid is None else np.asarray(list(grid), dtype=float)
    if len(grid) < 2:
        raise ValueError("grid needs at least 2 points")
    rows = [
        evaluate_row(float(t), *states(spec, float(t)), spec.tau, spec.literal_offdiag)
        for t in grid
    ]
    return sorted(rows, key=lambda row: row.t)


def thermal_content_sweep(
    r_residual: float,
    grid: Optional[Iterable[float]] = None,
    tau: float = 0.5,
) -> list[SweepRow]:
    """Fixed residual squeezing, varying thermal content of mode d.

    Mode c is pure, ``diag(e^{2r}, e^{-2r}) / 2``; mode d is the orthogonal
    squeezed thermal state with the same ``r`` and ``n_th`` thermal photons
    (purity ``1 / (1 + 2 n_th)``). The abscissa column ``t`` holds ``n_th``.
    """
    if not r_residual > 0:
        raise ValueError(f"r_residual must be > 0, got {r_residual}")
    grid = np.linspace(0.0, 0.5, 51) if grid is None else np.asarray(list(grid), dtype=float)
    if np.any(grid < 0):
        raise ValueError("thermal photon numbers must be >= 0")
    sigma_c = squeezed(r_residual, 0.0)
    rows = [
        evaluate_row(float(n), sigma_c, squeezed(r_residual, math.pi / 2, float(n)), tau)
        for n in np.sort(grid)
    ]
    return rows


CSV_HEADER = ("t", "f_cd", "f_th", "entangled_pred", "nu_minus", "entangled_oracle")


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    return "%.17g" % value


def rows_to_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([_fmt(getattr(row, name)) for name in CSV_HEADER])
    return buf.getvalue()


def rows_from_csv(text: str) -> list[SweepRow]:
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    rows = []
    for rec in reader:
        t, f_cd, f_th, pred, nu, oracle = rec
        rows.append(SweepRow(float(t), float(f_cd), float(f_th), pred == "1", float(nu), oracle == "1"))
    return rows


@dataclass(frozen=True)
class CriterionReport:
    """Criterion verdict and PPT oracle verdict for one input pair."""

    f_cd: float
    f_th: Optional[float]
    entangled_predicted: bool
    margin: Optional[float]
    nu_minus: float
    log_negativity: float
    entangled_oracle: bool
    agreement: bool

    def to_dict(self) -> dict:
        return asdict(self)


def report(
    sigma_c: SingleModeCM,
    sigma_d: SingleModeCM,
    tau: float,
    literal_offdiag: bool = False,
) -> CriterionReport:
    verdict = assess(sigma_c, sigma_d, tau)
    ppt = ppt_check(mix(sigma_c, sigma_d, tau, literal_offdiag=literal_offdiag))
    return CriterionReport(
        f_cd=verdict.f_cd,
        f_th=verdict.f_th,
        entangled_predicted=verdict.entangled_predicted,
        margin=verdict.margin,
        nu_minus=ppt.nu_minus,
        log_negativity=ppt.log_negativity,
        entangled_oracle=ppt.entangled,
        agreement=verdict.entangled_predicted == ppt.entangled,
    )
