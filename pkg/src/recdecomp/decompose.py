"""Numeric decomposition of a unitary along the recurrence schedule."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .gates import ControlledGate, apply_gate_left
from .linalg import INPUT_TOL, as_unitary, givens_for_pair, num_qubits
from .scheme import ScheduleEntry, generate_schedule

SKIP_TOL = 1e-14
RESIDUAL_TOL = 1e-9


class ResidualError(RuntimeError):
    def __init__(self, residual: float, tol: float):
        super().__init__(f"U_r...U_1 U deviates from I by {residual:.3e} (> {tol:.1e})")
        self.residual = residual
        self.tol = tol


@dataclass
class Decomposition:
    """Gates ``U_1 .. U_r`` (application order) with ``U_r ... U_1 U = I``.

    ``entries[i]`` is the schedule slot that produced ``gates[i]``.
    """

    n: int
    gates: list[ControlledGate] = field(default_factory=list)
    entries: list[ScheduleEntry] = field(default_factory=list)
    skipped: int = 0
    residual: float = 0.0

    @property
    def slots(self) -> int:
        return len(self.gates) + self.skipped

    def total_controls(self) -> int:
        return sum(g.pattern.control_count() for g in self.gates)


@dataclass(frozen=True)
class VerifyReport:
    deviation: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tol


def _last_gate(a: complex, b: complex, corner: tuple[complex, complex]) -> np.ndarray:
    # Givens on (a, b) with the second row rephased so the bottom-right
    # diagonal also lands on 1. Equals the inverse of the trailing 2x2 block.
    v = givens_for_pair(a, b, "second")
    z = v[1, 0] * corner[0] + v[1, 1] * corner[1]
    if abs(z) > 0:
        v[1] *= np.conj(z) / abs(z)
    return v


def decompose(
    u,
    skip_tol: float = SKIP_TOL,
    keep_identity_gates: bool = False,
    *,
    input_tol: float = INPUT_TOL,
    residual_tol: Optional[float] = RESIDUAL_TOL,
    full_width: bool = False,
    trace: Optional[Callable[[ScheduleEntry, np.ndarray], None]] = None,
) -> Decomposition:
    """Run the schedule against ``u`` and return the gates that reduce it to I.

    Each slot zeroes ``work[row, col]`` against its pivot row (target bit
    flipped) with a Givens rotation. A slot whose entry is already below
    ``skip_tol`` is skipped, except the last slot of a column, which also
    normalizes the diagonal; it is skipped only if its V is the identity to
    within ``skip_tol``. The very last slot additionally fixes the phase of
    the final diagonal entry.

    Earlier columns are unit vectors the schedule never disturbs, so gates
    are applied to columns ``col..N`` only unless ``full_width`` is set.
    ``trace(entry, work)`` is called after every slot.
    """
    u = as_unitary(u, input_tol)
    n = num_qubits(u)
    sched = generate_schedule(n)
    finals = sched.final_mask()
    last_step = len(sched)
    work = u.copy()
    dec = Decomposition(n)

    for e in sched:
        c = e.col - 1
        r, p = e.row - 1, e.pivot - 1
        row_is_hi = r > p
        lo, hi = (p, r) if row_is_hi else (r, p)
        a, b = work[lo, c], work[hi, c]
        target_mag = abs(work[r, c])

        if not finals[e.step - 1]:
            if target_mag <= skip_tol:
                v = None
            else:
                v = givens_for_pair(a, b, "second" if row_is_hi else "first")
        else:
            if e.step == last_step:
                v = _last_gate(a, b, (work[lo, hi], work[hi, hi]))
            else:
                v = givens_for_pair(a, b, "second" if row_is_hi else "first")
            if np.max(np.abs(v - np.eye(2))) <= skip_tol:
                v = None

        if v is None and keep_identity_gates:
            v = np.eye(2, dtype=np.complex128)
        if v is None:
            dec.skipped += 1
        else:
            g = ControlledGate(e.pattern, v)
            apply_gate_left(g, work if full_width else work[:, c:])
            dec.gates.append(g)
            dec.entries.append(e)
        if trace is not None:
            trace(e, work)

    dec.residual = float(np.max(np.abs(work - np.eye(1 << n))))
    if residual_tol is not None and dec.residual > residual_tol:
        raise ResidualError(dec.residual, residual_tol)
    return dec


def apply_gates(gates, m: np.ndarray) -> np.ndarray:
    """Apply ``gates`` in order from the left to a copy of ``m``."""
    out = np.array(m, dtype=np.complex128, copy=True)
    for g in gates:
        apply_gate_left(g, out)
    return out


def reconstruct(d: Decomposition) -> np.ndarray:
    """``U_1^dag U_2^dag ... U_r^dag``."""
    out = np.eye(1 << d.n, dtype=np.complex128)
    for g in reversed(d.gates):
        apply_gate_left(g.dagger(), out)
    return out


def verify(d: Decomposition, u, tol: float = 1e-10) -> VerifyReport:
    """Apply ``U_1 .. U_r`` to ``u`` and measure the distance to I."""
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (1 << d.n, 1 << d.n):
        raise ValueError(f"decomposition is for n={d.n}, matrix has shape {u.shape}")
    out = apply_gates(d.gates, u)
    dev = float(np.max(np.abs(out - np.eye(1 << d.n))))
    return VerifyReport(dev, tol)
