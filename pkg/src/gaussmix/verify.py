"""Randomised agreement test between the fidelity criterion and PPT."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .criterion import assess
from .gaussian import PhysicalityError, SingleModeCM, SqueezedThermalParams, make_cm
from .mixing import mix
from .ppt import ppt_check

BOUNDARY_BAND = 1e-9


@dataclass
class OracleSummary:
    trials: int
    disagreements: int
    excluded: int
    # smallest |f_th - f_cd| among trials that were compared
    worst_margin: float
    failures: list = field(default_factory=list)


def random_state(rng: np.random.Generator, r_max: float = 2.0, n_max: float = 2.0) -> SingleModeCM:
    return make_cm(
        SqueezedThermalParams(
            r=rng.uniform(0.0, r_max),
            theta=rng.uniform(0.0, math.pi),
            n_state=rng.uniform(0.0, n_max),
        )
    )


def verify_oracle(
    trials: int = 100_000,
    seed: int = 0,
    tau_range: tuple[float, float] = (0.05, 0.95),
    band: float = BOUNDARY_BAND,
    literal_offdiag: bool = False,
    keep_failures: int = 10,
) -> OracleSummary:
    rng = np.random.default_rng(seed)
    disagreements = excluded = 0
    worst = math.inf
    failures = []
    for _ in range(trials):
        sigma_c = random_state(rng)
        sigma_d = random_state(rng)
        tau = rng.uniform(*tau_range)
        verdict = assess(sigma_c, sigma_d, tau)
        if abs(verdict.margin) < band:
            excluded += 1
            continue
        worst = min(worst, abs(verdict.margin))
        try:
            oracle = ppt_check(mix(sigma_c, sigma_d, tau, literal_offdiag=literal_offdiag))
        except PhysicalityError:
            # only reachable with literal_offdiag; an unphysical output cannot confirm the verdict
            oracle = None
        if oracle is None or oracle.entangled != verdict.entangled_predicted:
            disagreements += 1
            if len(failures) < keep_failures:
                failures.append((sigma_c, sigma_d, tau, verdict, oracle))
    return OracleSummary(trials, disagreements, excluded, worst, failures)
