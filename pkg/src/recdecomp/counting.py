"""Exact gate-count formulas for the recurrence scheme and the Gray-code scheme.

``g[k]`` is the number of gates with exactly k controls in the decomposition
of an n-qubit unitary, k = 0..n-1. Python integers are unbounded, so every
figure here is exact for any n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

import numpy as np

from .scheme import MAX_QUBITS as MAX_SCHEDULE_QUBITS
from .scheme import generate_schedule

MAX_COUNT_QUBITS = 50


@dataclass(frozen=True)
class CountVector:
    n: int
    g: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.g[k]

    def __iter__(self):
        return iter(self.g)

    def __len__(self) -> int:
        return len(self.g)

    @property
    def gates(self) -> int:
        return sum(self.g)


@dataclass(frozen=True)
class CountBreakdown:
    """g[k] = A[k] + B[k] + C[k] + D[k] by schedule region.

    A: upper-left block; B: lower half of columns 1..N/2 except the
    ``(N/2 + l, l)`` steps; C: those steps; D: lower-right block.
    """

    n: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    C: tuple[int, ...]
    D: tuple[int, ...]

    def row(self, k: int) -> tuple[int, int, int, int]:
        return self.A[k], self.B[k], self.C[k], self.D[k]

    def totals(self) -> tuple[int, ...]:
        return tuple(a + b + c + d for a, b, c, d in zip(self.A, self.B, self.C, self.D))


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    T1: int
    T2: int

    @property
    def diff(self) -> int:
        return self.T2 - self.T1


def _check_n(n: int, hi: int, lo: int = 1) -> None:
    if not lo <= n <= hi:
        raise ValueError(f"qubit count must be in [{lo}, {hi}], got {n}")


def g1_closed_form(n: int) -> int:
    return n * (n - 1) * (2 ** (n - 2) + 1)


def g2_closed_form(n: int) -> int:
    # (4^n - 4)/3 is an integer for n >= 1.
    return (4**n - 4) // 3 - 2**n * (n - 1) + n * (n - 1) * (n - 2) // 2


def gmax_closed_form(n: int) -> int:
    """Fully controlled gate count g[n-1]."""
    if n == 1:
        return 1
    if n == 2:
        return 4
    return 7 + (n - 3)


def b1_closed_form(n: int) -> int:
    """One-control gates in region B: 2^(n-3) (n+2)(n-1)."""
    if n < 3:
        raise ValueError("closed form for B^1 holds for n >= 3")
    return 2 ** (n - 3) * (n + 2) * (n - 1)


@lru_cache(maxsize=None)
def _scheme(n: int) -> tuple[int, ...]:
    if n == 1:
        return (1,)
    prev = _scheme(n - 1)
    g = [0] * n
    g[0] = n
    g[n - 1] = gmax_closed_form(n)
    if n >= 3:
        g[1] = g1_closed_form(n)
    if n >= 4:
        g[2] = g2_closed_form(n)
    for k in range(3, n - 1):
        g[k] = prev[k] + prev[k - 1] + comb(n - 1, k)
    return tuple(g)


def count_scheme(n: int) -> CountVector:
    """Gate counts by number of controls, from the closed forms and recursion."""
    _check_n(n, MAX_COUNT_QUBITS)
    return CountVector(n, _scheme(n))


def count_scheme_from_schedule(n: int) -> CountVector:
    """Histogram of control counts over the generated schedule."""
    _check_n(n, MAX_SCHEDULE_QUBITS)
    hist = np.bincount(generate_schedule(n).control_counts(), minlength=n)
    return CountVector(n, tuple(int(x) for x in hist))


def count_breakdown(n: int) -> CountBreakdown:
    _check_n(n, MAX_SCHEDULE_QUBITS, lo=2)
    sched = generate_schedule(n)
    counts = sched.control_counts()
    regions = sched.regions()
    return CountBreakdown(
        n, *(tuple(int(x) for x in np.bincount(counts[regions == r], minlength=n)) for r in range(4))
    )


@lru_cache(maxsize=None)
def _gray(n: int) -> tuple[int, ...]:
    if n == 1:
        return (1,)
    prev = _gray(n - 1) + (0,)  # g_{n-1}^{n-1} = 0
    g = [2 ** (n - 1)]
    for k in range(1, n):
        g.append(prev[k] + prev[k - 1] + max(2 ** (n - 2), 2**k) + (2 ** (2 * n - k - 2) - 2 ** (n - 2)))
    return tuple(g)


def count_gray(n: int) -> CountVector:
    """Gate counts of the Gray-code scheme from its published recursion."""
    _check_n(n, MAX_COUNT_QUBITS)
    return CountVector(n, _gray(n))


def weighted_total(v: CountVector | Sequence[int], weights: Sequence[int] | None = None) -> int:
    """sum_k w_k g[k]; default weights w_k = k give the total control count."""
    g = list(v)
    if weights is None:
        weights = range(len(g))
    if len(weights) < len(g):
        raise ValueError(f"need {len(g)} weights, got {len(weights)}")
    return sum(w * x for w, x in zip(weights, g))


def total_controls(v: CountVector | Sequence[int]) -> int:
    return weighted_total(v)


def compare_series(n_max: int) -> list[ComparisonRow]:
    _check_n(n_max, MAX_COUNT_QUBITS)
    return [
        ComparisonRow(n, total_controls(count_scheme(n)), total_controls(count_gray(n)))
        for n in range(1, n_max + 1)
    ]
