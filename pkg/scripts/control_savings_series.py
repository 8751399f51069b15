"""Total control counts of the recurrence scheme (T1) against the Gray-code scheme (T2).

Writes the n, T1, T2, diff series as CSV and optionally plots diff on a log scale.

    python3 scripts/control_savings_series.py --max 50 --csv series.csv --plot series.png
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from typing import Optional

from recdecomp.counting import compare_series


@dataclass
class SeriesConfig:
    n_max: int = 50
    csv_path: Optional[str] = None
    plot_path: Optional[str] = None


def write_csv(rows, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["n", "T1", "T2", "diff"])
    for r in rows:
        w.writerow([r.n, r.T1, r.T2, r.diff])


def plot(rows, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    pts = [(r.n, r.diff) for r in rows if r.diff > 0]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy([p[0] for p in pts], [float(p[1]) for p in pts], "o-", ms=3)
    ax.set_xlabel("qubits n")
    ax.set_ylabel("T2 - T1 (controls saved)")
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)


def run(cfg: SeriesConfig) -> list:
    rows = compare_series(cfg.n_max)
    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as fh:
            write_csv(rows, fh)
    else:
        write_csv(rows, sys.stdout)
    if cfg.plot_path:
        plot(rows, cfg.plot_path)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=50, dest="n_max")
    ap.add_argument("--csv", dest="csv_path")
    ap.add_argument("--plot", dest="plot_path", help="PNG output; needs matplotlib")
    run(SeriesConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
