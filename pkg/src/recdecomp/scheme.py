"""Symbolic elimination schedule of the recurrence scheme.

For an n-qubit unitary (N = 2^n) the schedule lists, in execution order,
which entry ``(row, col)`` each controlled gate annihilates and the gate's
pattern. It is built from the (n-1)-qubit schedule:

* columns 1..N/2, upper half: the (n-1)-qubit column with a ``*`` prepended;
* columns 1..N/2, lower half: the lifted column-1 gates of the (n-1)-qubit
  scheme, reindexed by XOR with the column label and adapted so they leave
  earlier zeros alone, then one gate pairing ``(N/2 + l, l)`` with the
  diagonal;
* columns N/2+1..N-1: the (n-1)-qubit schedule shifted by N/2 with a ``1``
  prepended.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

import numpy as np

from .gates import FREE, ONE, TARGET, ZERO, GatePattern, parse_pattern

MAX_QUBITS = 12


def index_bits(k: int, n: int) -> str:
    """n-bit label of 1-based index ``k`` (the binary expansion of k - 1)."""
    return format(k - 1, f"0{n}b")


def xor_index(a: int, ell: int) -> int:
    """1-based index whose label is label(a) XOR label(ell)."""
    return ((a - 1) ^ (ell - 1)) + 1


def lift_gate(c) -> GatePattern:
    """Extend an (n-1)-qubit column-1 gate to n qubits.

    The new leading symbol is ``1`` when no existing position holds a
    1-control, ``*`` otherwise, so every lifted gate carries exactly one
    1-control and never pairs the first row with another.
    """
    c = c if isinstance(c, GatePattern) else parse_pattern(c)
    if ZERO in c.symbols:
        raise ValueError(f"column-1 gates never carry 0-controls, got {c}")
    lead = FREE if ONE in c.symbols else ONE
    return GatePattern(lead + c.symbols)


def _column_span(ell: int) -> int:
    """m with 2^(m-1) < ell <= 2^m."""
    return (ell - 1).bit_length()


def adapt_gate(c, ell: int) -> GatePattern:
    """Rewrite a lifted column-1 lower-half gate for column ``ell`` >= 2.

    With 2^(m-1) < ell <= 2^m: force c_n to 1 when none of c_n..c_{m+1} is
    a 1-control, and turn each 1-control c_j (j <= m) into a 0-control where
    bit j of label(ell) is set.
    """
    c = c if isinstance(c, GatePattern) else parse_pattern(c)
    n = c.n
    if not 2 <= ell <= 1 << (n - 1):
        raise ValueError(f"column {ell} outside [2, {1 << (n - 1)}] for n={n}")
    m = _column_span(ell)
    label = ell - 1
    out = list(c.symbols)  # out[n - j] is c_j
    if all(c.symbol(j) != ONE for j in range(m + 1, n + 1)):
        out[0] = ONE
    for j in range(1, m + 1):
        if c.symbol(j) == ONE and (label >> (j - 1)) & 1:
            out[n - j] = ZERO
    return GatePattern("".join(out))


def final_gate(ell: int, n: int) -> GatePattern:
    """Gate ``V c_{n-1}..c_1`` pairing ``(N/2 + ell, ell)`` with the diagonal.

    Controls are the 1-bits of label(ell); zero bits become free.
    """
    if not 1 <= ell <= 1 << (n - 1):
        raise ValueError(f"column {ell} outside [1, {1 << (n - 1)}] for n={n}")
    bits = index_bits(ell, n - 1) if n > 1 else ""
    return GatePattern(TARGET + bits.replace("0", FREE))


@dataclass(frozen=True)
class ScheduleEntry:
    step: int
    row: int
    col: int
    pattern: GatePattern

    @property
    def pivot(self) -> int:
        """Row paired with ``row`` by the gate (target bit flipped)."""
        return xor_index(self.row, (1 << (self.pattern.target - 1)) + 1)

    def __str__(self) -> str:
        return f"{self.step} {self.row} {self.col} {self.pattern}"


REGIONS = "ABCD"


@dataclass(frozen=True, eq=False)
class Schedule:
    """Elimination schedule stored column-major as parallel integer arrays.

    Patterns are kept as bitmasks: ``target`` is the 1-based target
    position, bit j-1 of ``control_mask`` marks c_j as a control and the
    same bit of ``control_value`` gives its value. Entries are materialized
    as ScheduleEntry objects only on access.
    """

    n: int
    row: np.ndarray
    col: np.ndarray
    target: np.ndarray
    control_mask: np.ndarray
    control_value: np.ndarray

    def __len__(self) -> int:
        return len(self.row)

    def __getitem__(self, i: int) -> ScheduleEntry:
        return ScheduleEntry(i + 1, int(self.row[i]), int(self.col[i]), self.pattern(i))

    def __iter__(self) -> Iterator[ScheduleEntry]:
        return (self[i] for i in range(len(self)))

    @property
    def dim(self) -> int:
        return 1 << self.n

    def pattern(self, i: int) -> GatePattern:
        return GatePattern(_render(self.n, int(self.target[i]), int(self.control_mask[i]), int(self.control_value[i])))

    def patterns(self) -> list[str]:
        return [str(self.pattern(i)) for i in range(len(self))]

    @cached_property
    def _column_starts(self) -> np.ndarray:
        return np.searchsorted(self.col, np.arange(1, self.dim + 1, dtype=self.col.dtype))

    def column_slice(self, col: int) -> slice:
        starts = self._column_starts
        if not 1 <= col < self.dim:
            return slice(len(self), len(self))
        return slice(int(starts[col - 1]), int(starts[col]))

    def column(self, col: int) -> list[ScheduleEntry]:
        sl = self.column_slice(col)
        return [self[i] for i in range(sl.start, sl.stop)]

    def control_counts(self) -> np.ndarray:
        return _popcount(self.control_mask)

    def regions(self) -> np.ndarray:
        """Region code per entry: 0..3 for A, B, C, D.

        A upper half of columns 1..N/2, B lower half excluding the
        diagonal-pairing step, C the ``(N/2 + l, l)`` step, D the lower
        right block.
        """
        half = self.dim // 2
        out = np.where(self.row <= half, 0, np.where(self.row == half + self.col, 2, 1))
        return np.where(self.col > half, 3, out)

    def region(self, e: ScheduleEntry) -> str:
        return REGIONS[int(self.regions()[e.step - 1])]

    def final_mask(self) -> np.ndarray:
        """True at the last entry of each column."""
        out = np.ones(len(self), dtype=bool)
        out[:-1] = self.col[1:] != self.col[:-1]
        return out


@lru_cache(maxsize=1 << 16)
def _render(n: int, target: int, mask: int, value: int) -> str:
    return str(GatePattern.from_masks(n, target, mask, value))


def _popcount(a: np.ndarray) -> np.ndarray:
    a = a.astype(np.int64)
    out = np.zeros_like(a)
    while np.any(a):
        out += a & 1
        a >>= 1
    return out


def _lift_masks(n: int, mask: np.ndarray, value: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Column-1 gates only carry 1-controls, so mask == value.
    top = 1 << (n - 1)
    add = np.where(value == 0, top, 0)
    return mask | add, value | add


def _adapt_masks(n: int, ell: int, mask: np.ndarray, value: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    m = _column_span(ell)
    low = (1 << m) - 1
    high = ((1 << n) - 1) ^ low
    top = 1 << (n - 1)
    add = np.where((mask & value & high) == 0, top, 0)
    mask, value = mask | add, value | add
    flip = mask & value & low & (ell - 1)
    return mask, value ^ flip


@lru_cache(maxsize=None)
def _arrays(n: int) -> tuple[np.ndarray, ...]:
    if n == 1:
        return tuple(np.array([x], dtype=np.int32) for x in (2, 1, 1, 0, 0))
    row, col, tgt, mask, value = _arrays(n - 1)
    half = 1 << (n - 1)
    k = half - 1  # entries in column 1 of the (n-1)-qubit scheme
    c1_row = row[:k]
    c1_tgt = tgt[:k]
    lift_mask, lift_value = _lift_masks(n, mask[:k], value[:k])
    lower_rows = np.append(c1_row + half, half + 1).astype(np.int32) - 1
    bounds = np.searchsorted(col, np.arange(1, half + 1))

    parts = []
    for ell in range(1, half + 1):
        sl = slice(bounds[ell - 1], bounds[ell] if ell < half else bounds[ell - 1])
        if ell == 1:
            am, av = lift_mask, lift_value
        else:
            am, av = _adapt_masks(n, ell, lift_mask, lift_value)
        fin = (ell - 1) & (half - 1)
        parts.append((
            np.concatenate([row[sl], (lower_rows[:-1] ^ (ell - 1)) + 1, [half + ell]]),
            np.full(sl.stop - sl.start + half, ell),
            np.concatenate([tgt[sl], c1_tgt, [n]]),
            np.concatenate([mask[sl], am, [fin]]),
            np.concatenate([value[sl], av, [fin]]),
        ))
    top = 1 << (n - 1)
    parts.append((row + half, col + half, tgt, mask | top, value | top))
    out = tuple(np.concatenate([p[i] for p in parts]).astype(np.int32) for i in range(5))
    for a in out:
        a.setflags(write=False)
    return out


def column1_lower_order(n: int) -> tuple[int, ...]:
    """Rows of the lower half of column 1 in elimination order.

    The (n-1)-qubit column-1 rows shifted by N/2, followed by N/2 + 1.
    """
    if n < 2:
        raise ValueError("lower half of column 1 needs n >= 2")
    half = 1 << (n - 1)
    row = _arrays(n - 1)[0]
    return tuple(int(r) + half for r in row[: half - 1]) + (half + 1,)


@lru_cache(maxsize=None)
def generate_schedule(n: int) -> Schedule:
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count must be in [1, {MAX_QUBITS}], got {n}")
    return Schedule(n, *_arrays(n))
