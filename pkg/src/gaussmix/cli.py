"""Command-line entry point: ``gaussmix {check,sweep,critical-t,verify-oracle,asymptote}``.

Exit codes: 0 success, 2 contract error (bad flags or unphysical input),
3 disagreement found by ``verify-oracle``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

import numpy as np

from . import criterion
from .gaussian import SingleModeCM, squeezed
from .scenarios import (
    Kind,
    ScenarioSpec,
    critical_transmission,
    report,
    rows_to_csv,
    sweep,
    thermal_content_sweep,
    transmission_grid,
)
from .verify import BOUNDARY_BAND, verify_oracle

EXIT_OK = 0
EXIT_CONTRACT = 2
EXIT_DISAGREEMENT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONTRACT, f"{self.prog}: error: {message}\n")


def _add_scenario_flags(p: argparse.ArgumentParser, r_default: Optional[float] = 0.7) -> None:
    p.add_argument("--scenario", choices=[k.value for k in Kind], default=Kind.SYMMETRIC.value)
    p.add_argument("--r", type=float, default=r_default, help="initial squeezing of both ancestors")
    p.add_argument("--tau", type=float, default=0.5, help="mixing beam-splitter transmissivity")
    p.add_argument("--nth", type=float, default=None,
                   help="bath photons on mode d (thermal scenarios; default 1.0)")
    p.add_argument("--ratio", type=float, default=0.9, help="mode-d transmission ratio (asymmetric-ratio)")
    p.add_argument("--literal-offdiag", action="store_true",
                   help="use tau(1-tau) instead of sqrt(tau(1-tau)) for the correlation block")


def _spec(args) -> ScenarioSpec:
    kind = Kind(args.scenario)
    n_th = args.nth
    if n_th is None:
        n_th = 1.0 if kind.thermal else 0.0
    return ScenarioSpec(kind, r=args.r, tau=args.tau, n_th=n_th, ratio=args.ratio,
                        literal_offdiag=args.literal_offdiag)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gaussmix", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="assess one input pair, print JSON")
    p.add_argument("--r", type=float, default=0.92, help="squeezing of both inputs unless overridden")
    p.add_argument("--rc", type=float, default=None)
    p.add_argument("--rd", type=float, default=None)
    p.add_argument("--theta-c", type=float, default=0.0)
    p.add_argument("--theta-d", type=float, default=math.pi / 2)
    p.add_argument("--nc", type=float, default=0.0, help="thermal photons of mode c")
    p.add_argument("--nd", type=float, default=0.0, help="thermal photons of mode d")
    p.add_argument("--cm-c", type=float, nargs=3, metavar=("XX", "XP", "PP"),
                   help="raw covariance matrix of mode c (overrides squeezing flags)")
    p.add_argument("--cm-d", type=float, nargs=3, metavar=("XX", "XP", "PP"))
    p.add_argument("--tau", type=float, default=0.5)
    p.add_argument("--literal-offdiag", action="store_true")

    p = sub.add_parser("sweep", help="scenario sweep as CSV")
    _add_scenario_flags(p)
    p.add_argument("--grid", type=int, default=201)
    p.add_argument("--tmin", type=float, default=None)
    p.add_argument("--tmax", type=float, default=None)
    p.add_argument("--thermal-content", action="store_true",
                   help="sweep n_th at fixed residual squeezing --r (abscissa = n_th)")
    p.add_argument("--out", default=None, help="write CSV here instead of stdout")

    p = sub.add_parser("critical-t", help="critical transmission of a scenario")
    _add_scenario_flags(p)

    p = sub.add_parser("verify-oracle", help="randomised criterion-vs-PPT agreement test")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--band", type=float, default=BOUNDARY_BAND)
    p.add_argument("--literal-offdiag", action="store_true")

    p = sub.add_parser("asymptote", help="large-squeezing critical transmission")
    p.add_argument("--nth", type=float, required=True)
    p.add_argument("--model-limit", action="store_true",
                   help="print 1 - 1/sqrt(1 + 2 nth) instead of the quoted closed form")
    return parser


def _cmd_check(args) -> int:
    if args.cm_c is not None:
        sigma_c = SingleModeCM(*args.cm_c)
    else:
        sigma_c = squeezed(args.r if args.rc is None else args.rc, args.theta_c, args.nc)
    if args.cm_d is not None:
        sigma_d = SingleModeCM(*args.cm_d)
    else:
        sigma_d = squeezed(args.r if args.rd is None else args.rd, args.theta_d, args.nd)
    rep = report(sigma_c, sigma_d, args.tau, literal_offdiag=args.literal_offdiag)
    print(json.dumps(rep.to_dict()))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if args.thermal_content:
        lo = 0.0 if args.tmin is None else args.tmin
        hi = 0.5 if args.tmax is None else args.tmax
        if not 0.0 <= lo < hi:
            raise ValueError(f"need 0 <= nmin < nmax, got [{lo}, {hi}]")
        rows = thermal_content_sweep(args.r, np.linspace(lo, hi, args.grid), tau=args.tau)
    else:
        grid = transmission_grid(
            args.grid,
            0.005 if args.tmin is None else args.tmin,
            1.0 if args.tmax is None else args.tmax,
        )
        rows = sweep(_spec(args), grid)
    text = rows_to_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_critical(args) -> int:
    t_c = critical_transmission(_spec(args))
    print("none" if t_c is None else "%.17g" % t_c)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.trials < 1:
        raise ValueError("--trials must be >= 1")
    summary = verify_oracle(args.trials, args.seed, band=args.band, literal_offdiag=args.literal_offdiag)
    print(f"trials: {summary.trials}")
    print(f"disagreements: {summary.disagreements}")
    print(f"excluded_by_band: {summary.excluded}")
    print("worst_margin: %.17g" % summary.worst_margin)
    return EXIT_DISAGREEMENT if summary.disagreements else EXIT_OK


def _cmd_asymptote(args) -> int:
    fn = criterion.critical_transmission_limit if args.model_limit else criterion.critical_transmission_asymptote
    print("%.17g" % fn(args.nth))
    return EXIT_OK


COMMANDS = {
    "check": _cmd_check,
    "sweep": _cmd_sweep,
    "critical-t": _cmd_critical,
    "verify-oracle": _cmd_verify,
    "asymptote": _cmd_asymptote,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        # PhysicalityError is a ValueError
        print(f"gaussmix: error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
