"""Dense complex matrix helpers: unitarity checks, 2x2 eliminators, Haar sampling."""

from __future__ import annotations

import numpy as np

# Validation tolerance for user-supplied matrices (possibly read from text).
INPUT_TOL = 1e-10
# Tolerance for matrices we build ourselves.
INTERNAL_TOL = 1e-12

MAX_QUBITS = 12


class MatrixError(ValueError):
    """Malformed matrix: wrong shape, non-finite entries, bad dimension."""


class UnitarityError(MatrixError):
    """Matrix failed the unitarity check."""

    def __init__(self, deviation: float, tol: float):
        super().__init__(f"matrix is not unitary: max |M^dag M - I| = {deviation:.3e} > {tol:.1e}")
        self.deviation = deviation
        self.tol = tol


def _as_square(m) -> np.ndarray:
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise MatrixError(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise MatrixError("matrix has non-finite entries")
    return arr


def unitarity_deviation(m) -> float:
    """Max-abs entry of M^dag M - I."""
    arr = _as_square(m)
    gram = arr.conj().T @ arr
    gram[np.diag_indices_from(gram)] -= 1.0
    return float(np.max(np.abs(gram))) if gram.size else 0.0


def check_unitary(m, tol: float = INTERNAL_TOL) -> tuple[bool, float]:
    """Return ``(ok, deviation)`` where deviation is ``max|M^dag M - I|``.

    Raises MatrixError for non-square or non-finite input.
    """
    dev = unitarity_deviation(m)
    return dev <= tol, dev


def num_qubits(m) -> int:
    """Qubit count n of a 2^n x 2^n matrix."""
    dim = np.shape(m)[0]
    if dim < 2 or dim & (dim - 1):
        raise MatrixError(f"dimension {dim} is not a power of two >= 2")
    return dim.bit_length() - 1


def as_unitary(m, tol: float = INPUT_TOL) -> np.ndarray:
    """Validate ``m`` as an n-qubit unitary and return it as a complex array."""
    arr = _as_square(m)
    n = num_qubits(arr)
    if n > MAX_QUBITS:
        raise MatrixError(f"{n} qubits exceeds the supported maximum of {MAX_QUBITS}")
    ok, dev = check_unitary(arr, tol)
    if not ok:
        raise UnitarityError(dev, tol)
    return arr


def givens_for_pair(a: complex, b: complex, zero_slot: str = "second") -> np.ndarray:
    """Special-unitary 2x2 ``V`` that annihilates one component of ``(a, b)``.

    ``a`` sits in the row whose target bit is 0, ``b`` in the row whose
    target bit is 1. With ``zero_slot="second"`` the result satisfies
    ``V @ (a, b) == (r, 0)``; with ``"first"`` it gives ``(0, r)``, where
    ``r = sqrt(|a|^2 + |b|^2)`` is real and nonnegative.
    """
    a = complex(a)
    b = complex(b)
    r = float(np.hypot(abs(a), abs(b)))
    if r == 0.0:
        raise ValueError("nothing to eliminate: both entries are zero")
    if zero_slot == "second":
        v = np.array([[a.conjugate(), b.conjugate()], [-b, a]])
    elif zero_slot == "first":
        v = np.array([[b, -a], [a.conjugate(), b.conjugate()]])
    else:
        raise ValueError(f"zero_slot must be 'first' or 'second', not {zero_slot!r}")
    return v / r


def haar_random_unitary(n: int, seed: int) -> np.ndarray:
    """Haar-distributed 2^n x 2^n unitary, deterministic in ``seed``.

    QR of a complex Ginibre matrix with the phases of diag(R) folded back
    into Q (Mezzadri's correction).
    """
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count must be in [1, {MAX_QUBITS}], got {n}")
    dim = 1 << n
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))
