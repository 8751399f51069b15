"""Decompose seeded Haar unitaries and report residuals, gate counts and timings per n."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

import numpy as np

from recdecomp.counting import count_scheme
from recdecomp.decompose import decompose, reconstruct, verify
from recdecomp.linalg import haar_random_unitary


@dataclass
class BenchConfig:
    qubits: list[int] = field(default_factory=lambda: [1, 2, 3, 4, 5, 6])
    seeds: int = 20
    first_seed: int = 0


@dataclass
class BenchRow:
    n: int
    seeds: int
    max_residual: float
    max_reconstruct: float
    mean_gates: float
    slots: int
    mean_controls: float
    seconds_per_matrix: float


def bench_one(n: int, cfg: BenchConfig) -> BenchRow:
    res = rec = 0.0
    gates = controls = 0
    t0 = time.perf_counter()
    for seed in range(cfg.first_seed, cfg.first_seed + cfg.seeds):
        u = haar_random_unitary(n, seed)
        d = decompose(u)
        res = max(res, verify(d, u).deviation)
        rec = max(rec, float(np.max(np.abs(reconstruct(d) - u))))
        gates += len(d.gates)
        controls += d.total_controls()
    dt = (time.perf_counter() - t0) / cfg.seeds
    return BenchRow(n, cfg.seeds, res, rec, gates / cfg.seeds, count_scheme(n).gates, controls / cfg.seeds, dt)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--qubits", type=int, nargs="+", default=BenchConfig().qubits)
    ap.add_argument("--seeds", type=int, default=BenchConfig.seeds)
    ap.add_argument("--first-seed", type=int, default=0)
    cfg = BenchConfig(**vars(ap.parse_args()))

    print(f"{'n':>2} {'seeds':>5} {'residual':>9} {'reconstr':>9} {'gates':>9} {'slots':>7} {'controls':>9} {'s/matrix':>9}")
    for n in cfg.qubits:
        r = bench_one(n, cfg)
        print(
            f"{r.n:>2} {r.seeds:>5} {r.max_residual:>9.1e} {r.max_reconstruct:>9.1e} {r.mean_gates:>9.1f} "
            f"{r.slots:>7} {r.mean_controls:>9.1f} {r.seconds_per_matrix:>9.4f}"
        )


if __name__ == "__main__":
    main()
