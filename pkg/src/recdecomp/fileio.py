"""Text formats for matrices, schedules and decomposition records.

Matrix file::

    n
    re,im re,im ...        # 2^n lines of 2^n entries

Decomposition record file::

    decomposition n=<n> skipped=<k> residual=<float> gates=<r>
    <step> <row> <col> <pattern> <v11> <v12> <v21> <v22>
    ...

Complex numbers are ``re,im`` with 17 significant digits, so doubles
round-trip exactly. Lines starting with ``#`` are ignored on input.
"""

from __future__ import annotations

from pathlib import Path
from typing import IO, Iterable

import numpy as np

from .decompose import Decomposition
from .gates import ControlledGate, parse_pattern
from .scheme import Schedule, ScheduleEntry


class FormatError(ValueError):
    pass


def format_complex(z: complex) -> str:
    return f"{z.real:.17g},{z.imag:.17g}"


def parse_complex(tok: str) -> complex:
    re_s, sep, im_s = tok.partition(",")
    try:
        return complex(float(re_s), float(im_s) if sep else 0.0)
    except ValueError:
        raise FormatError(f"bad complex entry {tok!r}") from None


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def write_matrix(m: np.ndarray, fh: IO[str]) -> None:
    dim = m.shape[0]
    fh.write(f"{dim.bit_length() - 1}\n")
    for row in m:
        fh.write(" ".join(format_complex(z) for z in row) + "\n")


def read_matrix(fh: IO[str]) -> np.ndarray:
    lines = _lines(fh.read())
    if not lines:
        raise FormatError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"first line must be the qubit count, got {lines[0]!r}") from None
    if not 1 <= n <= 12:
        raise FormatError(f"qubit count {n} out of range [1, 12]")
    dim = 1 << n
    rows = lines[1:]
    if len(rows) != dim:
        raise FormatError(f"expected {dim} matrix rows for n={n}, got {len(rows)}")
    out = np.empty((dim, dim), dtype=np.complex128)
    for i, ln in enumerate(rows):
        toks = ln.split()
        if len(toks) != dim:
            raise FormatError(f"row {i + 1}: expected {dim} entries, got {len(toks)}")
        out[i] = [parse_complex(t) for t in toks]
    if not np.all(np.isfinite(out)):
        raise FormatError("matrix has non-finite entries")
    return out


def write_schedule(sched: Schedule | Iterable[ScheduleEntry], fh: IO[str]) -> None:
    fh.write("# step row col pattern\n")
    for e in sched:
        fh.write(f"{e}\n")


def write_decomposition(d: Decomposition, fh: IO[str]) -> None:
    fh.write(f"decomposition n={d.n} skipped={d.skipped} residual={d.residual:.17g} gates={len(d.gates)}\n")
    for e, g in zip(d.entries, d.gates):
        vs = " ".join(format_complex(z) for z in g.v.ravel())
        fh.write(f"{e.step} {e.row} {e.col} {g.pattern} {vs}\n")


def read_decomposition(fh: IO[str]) -> Decomposition:
    lines = _lines(fh.read())
    if not lines or not lines[0].startswith("decomposition"):
        raise FormatError("missing 'decomposition' header line")
    try:
        header = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
        n, skipped = int(header["n"]), int(header["skipped"])
        residual, count = float(header["residual"]), int(header["gates"])
    except (KeyError, ValueError) as exc:
        raise FormatError(f"bad header {lines[0]!r}: {exc}") from None
    if count != len(lines) - 1:
        raise FormatError(f"header announces {count} gates, file has {len(lines) - 1}")
    d = Decomposition(n, skipped=skipped, residual=residual)
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 8:
            raise FormatError(f"gate record needs 8 fields, got {len(toks)}: {ln!r}")
        step, row, col = (int(t) for t in toks[:3])
        pattern = parse_pattern(toks[3])
        if pattern.n != n:
            raise FormatError(f"pattern {pattern} does not act on {n} qubits")
        v = np.array([parse_complex(t) for t in toks[4:]]).reshape(2, 2)
        d.entries.append(ScheduleEntry(step, row, col, pattern))
        d.gates.append(ControlledGate(pattern, v))
    return d


def load_matrix(path: str | Path) -> np.ndarray:
    with open(path) as fh:
        return read_matrix(fh)


def load_decomposition(path: str | Path) -> Decomposition:
    with open(path) as fh:
        return read_decomposition(fh)
