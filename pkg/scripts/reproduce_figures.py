"""Write sweep CSVs for every built-in scenario plus critical-transmission tables.

Usage: python3 scripts/reproduce_figures.py [--out results]
"""

import argparse
from pathlib import Path

import numpy as np

from gaussmix import Kind, ScenarioSpec, critical_transmission, critical_transmission_asymptote, sweep, thermal_content_sweep
from gaussmix.scenarios import rows_to_csv, transmission_grid

SQUEEZINGS = (0.3, 0.7, 1.5)


def write(path, text):
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}")


def critical_table(path, header, xs, fn):
    lines = [header]
    for x in xs:
        t_c = fn(float(x))
        lines.append(f"{x:.17g},{'' if t_c is None else format(t_c, '.17g')}")
    write(path, "\n".join(lines) + "\n")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)

    for kind in Kind:
        n_th = 1.0 if kind.thermal else 0.0
        grid = transmission_grid(tmin=0.0) if kind in (Kind.FULLY_ASYMMETRIC, Kind.FULLY_ASYMMETRIC_THERMAL) else None
        for r in SQUEEZINGS:
            rows = sweep(ScenarioSpec(kind, r, n_th=n_th), grid)
            write(args.out / f"{kind.value}_r{r}.csv", rows_to_csv(rows))

    write(args.out / "thermal_content_r0.26.csv", rows_to_csv(thermal_content_sweep(0.26)))

    critical_table(
        args.out / "critical_t_vs_r.csv", "r,t_c", np.linspace(0.1, 3.0, 30),
        lambda r: critical_transmission(ScenarioSpec(Kind.SYMMETRIC_THERMAL, r, n_th=1.0)),
    )
    critical_table(
        args.out / "critical_t_vs_nth.csv", "n_th,t_c", np.linspace(0.1, 2.0, 20),
        lambda n: critical_transmission(ScenarioSpec(Kind.SYMMETRIC_THERMAL, 0.7, n_th=n)),
    )
    critical_table(
        args.out / "asymptote_vs_nth.csv", "n_th,t_c", np.linspace(0.0, 2.0, 21),
        critical_transmission_asymptote,
    )


if __name__ == "__main__":
    main()
