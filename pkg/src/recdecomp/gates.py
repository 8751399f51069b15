"""Controlled single-qubit gate patterns and their action on matrices.

A pattern is written left to right as ``c_n ... c_1`` over the alphabet
``0``, ``1``, ``*`` (free) and ``V`` (target), e.g. ``"10V*"``. Rows are
1-based; row ``k`` carries the n-bit label of ``k - 1`` with ``c_1`` the
least-significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

ZERO, ONE, FREE, TARGET = "0", "1", "*", "V"
SYMBOLS = frozenset((ZERO, ONE, FREE, TARGET))


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class GatePattern:
    symbols: str

    def __post_init__(self):
        if not self.symbols:
            raise PatternError("empty pattern")
        bad = set(self.symbols) - SYMBOLS
        if bad:
            raise PatternError(f"illegal symbol(s) {sorted(bad)} in {self.symbols!r}")
        if self.symbols.count(TARGET) != 1:
            raise PatternError(f"pattern {self.symbols!r} must contain exactly one 'V'")

    def __str__(self) -> str:
        return self.symbols

    @property
    def n(self) -> int:
        return len(self.symbols)

    def symbol(self, position: int) -> str:
        """Symbol c_position (1-based, counted from the right)."""
        return self.symbols[self.n - position]

    @property
    def target(self) -> int:
        """1-based position of the target qubit."""
        return self.n - self.symbols.index(TARGET)

    @property
    def controls(self) -> dict[int, int]:
        """Map position -> required bit value for every 0/1 control."""
        return {self.n - i: int(s) for i, s in enumerate(self.symbols) if s in (ZERO, ONE)}

    def control_count(self) -> int:
        return sum(s in (ZERO, ONE) for s in self.symbols)

    @property
    def control_mask(self) -> int:
        """Bit j-1 set iff c_j is a 0/1 control."""
        return sum(1 << (pos - 1) for pos in self.controls)

    @property
    def control_value(self) -> int:
        """Bit j-1 set iff c_j is a 1-control."""
        return sum(1 << (pos - 1) for pos, bit in self.controls.items() if bit)

    @classmethod
    def from_masks(cls, n: int, target: int, control_mask: int, control_value: int) -> "GatePattern":
        out = []
        for pos in range(n, 0, -1):
            bit = 1 << (pos - 1)
            if pos == target:
                out.append(TARGET)
            elif control_mask & bit:
                out.append(ONE if control_value & bit else ZERO)
            else:
                out.append(FREE)
        return cls("".join(out))

    def matches(self, row: int) -> bool:
        """True if the label of 1-based ``row`` satisfies every control."""
        k = row - 1
        return all((k >> (pos - 1)) & 1 == bit for pos, bit in self.controls.items())


def parse_pattern(s: str) -> GatePattern:
    return GatePattern(s.strip().strip("()"))


def _coerce(p) -> GatePattern:
    return p if isinstance(p, GatePattern) else parse_pattern(p)


@lru_cache(maxsize=4096)
def _pair_indices(symbols: str) -> tuple[np.ndarray, np.ndarray]:
    p = GatePattern(symbols)
    idx = np.arange(1 << p.n)
    stride = 1 << (p.target - 1)
    keep = (idx & stride) == 0
    for pos, bit in p.controls.items():
        keep &= ((idx >> (pos - 1)) & 1) == bit
    lo = idx[keep]
    lo.setflags(write=False)
    hi = lo + stride
    hi.setflags(write=False)
    return lo, hi


def pair_indices(p) -> tuple[np.ndarray, np.ndarray]:
    """0-based (lo, hi) row arrays touched by pattern ``p``, sorted by lo."""
    return _pair_indices(_coerce(p).symbols)


def matched_row_pairs(p) -> list[tuple[int, int]]:
    """1-based ``(lo, hi)`` row pairs acted on by ``p``; lo has target bit 0."""
    lo, hi = pair_indices(p)
    return [(int(a) + 1, int(b) + 1) for a, b in zip(lo, hi)]


@dataclass(frozen=True, eq=False)
class ControlledGate:
    pattern: GatePattern
    v: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.v, dtype=np.complex128)
        if v.shape != (2, 2):
            raise ValueError(f"V must be 2x2, got shape {v.shape}")
        object.__setattr__(self, "v", v)
        if isinstance(self.pattern, str):
            object.__setattr__(self, "pattern", parse_pattern(self.pattern))

    @property
    def n(self) -> int:
        return self.pattern.n

    def dagger(self) -> "ControlledGate":
        return ControlledGate(self.pattern, self.v.conj().T)


_PROJ0 = np.array([[1, 0], [0, 0]], dtype=np.complex128)
_PROJ1 = np.array([[0, 0], [0, 1]], dtype=np.complex128)
_ID2 = np.eye(2, dtype=np.complex128)


def expand_gate(g: ControlledGate) -> np.ndarray:
    """Dense N x N matrix ``I_N + V_n (x) ... (x) V_1``.

    Factor per position: |0><0| for a 0-control, |1><1| for a 1-control,
    V - I for the target, I for a free bit.
    """
    factors = {ZERO: _PROJ0, ONE: _PROJ1, FREE: _ID2, TARGET: g.v - _ID2}
    out = np.ones((1, 1), dtype=np.complex128)
    for s in g.pattern.symbols:
        out = np.kron(out, factors[s])
    return np.eye(out.shape[0], dtype=np.complex128) + out


@lru_cache(maxsize=1 << 16)
def _bit_keys(symbols: str) -> tuple[tuple, tuple]:
    # Index tuples into the (2,)*n row view; axis 0 is c_n.
    lo, hi = [], []
    for s in symbols:
        if s == TARGET:
            lo.append(0)
            hi.append(1)
        else:
            k = slice(None) if s == FREE else int(s)
            lo.append(k)
            hi.append(k)
    return tuple(lo), tuple(hi)


def apply_gate_left(g: ControlledGate, m) -> None:
    """In place ``m <- expand_gate(g) @ m``, touching only the matched rows.

    ``m`` may be a column slice of a larger matrix; the row count must be 2^n.
    Numpy arrays are updated through a (2,)*n reshaped view of the rows;
    any other object supporting row indexing falls back to the pair index
    arrays.
    """
    if m.shape[0] != 1 << g.n:
        raise ValueError(f"gate on {g.n} qubits cannot act on {m.shape[0]} rows")
    (v00, v01), (v10, v11) = g.v
    if isinstance(m, np.ndarray):
        view = m.reshape((2,) * g.n + m.shape[1:])
        lo, hi = _bit_keys(g.pattern.symbols)
        top = view[lo].copy()
        bottom = view[hi]
        view[lo] = v00 * top + v01 * bottom
        view[hi] = v10 * top + v11 * bottom
        return
    lo, hi = pair_indices(g.pattern)
    top = m[lo]
    bottom = m[hi]
    m[lo] = v00 * top + v01 * bottom
    m[hi] = v10 * top + v11 * bottom
