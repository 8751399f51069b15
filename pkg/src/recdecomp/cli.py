"""Command-line front end.

Exit codes: 0 ok, 1 verification failed, 2 usage or parse error,
3 non-unitary input, 4 decomposition residual above tolerance.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import sys
from typing import Sequence

from . import counting
from .decompose import decompose, verify
from .fileio import FormatError, load_decomposition, load_matrix, write_decomposition, write_matrix, write_schedule
from .linalg import MatrixError, UnitarityError, as_unitary, haar_random_unitary
from .scheme import MAX_QUBITS, generate_schedule

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NONUNITARY, EXIT_RESIDUAL = 0, 1, 2, 3, 4
FILE_TOL = 1e-8


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="\n") as fh:
            yield fh


def _fail(code: int, msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def cmd_schedule(args) -> int:
    if not 1 <= args.n <= MAX_QUBITS:
        return _fail(EXIT_USAGE, f"n must be in [1, {MAX_QUBITS}]")
    with _output(args.out) as fh:
        write_schedule(generate_schedule(args.n), fh)
    return EXIT_OK


def cmd_random(args) -> int:
    if not 1 <= args.n <= MAX_QUBITS:
        return _fail(EXIT_USAGE, f"n must be in [1, {MAX_QUBITS}]")
    with _output(args.out) as fh:
        write_matrix(haar_random_unitary(args.n, args.seed), fh)
    return EXIT_OK


def cmd_decompose(args) -> int:
    if (args.matrix is None) == (args.random is None):
        return _fail(EXIT_USAGE, "give either a matrix file or --random N")
    try:
        if args.random is not None:
            u = haar_random_unitary(args.random, args.seed)
        else:
            u = as_unitary(load_matrix(args.matrix), FILE_TOL)
    except UnitarityError as exc:
        return _fail(EXIT_NONUNITARY, str(exc))
    except (FormatError, MatrixError, ValueError, OSError) as exc:
        return _fail(EXIT_USAGE, str(exc))

    d = decompose(u, args.skip_tol, args.keep_identity, input_tol=FILE_TOL, residual_tol=None)
    report = verify(d, u, args.tol)
    with _output(args.out) as fh:
        write_decomposition(d, fh)
    print(
        f"slots={d.slots} gates={len(d.gates)} skipped={d.skipped} "
        f"controls={d.total_controls()} residual={d.residual:.3e} verified={report.deviation:.3e}",
        file=sys.stderr if args.out in (None, "-") else sys.stdout,
    )
    if max(d.residual, report.deviation) > args.tol:
        return _fail(EXIT_RESIDUAL, f"residual {max(d.residual, report.deviation):.3e} exceeds {args.tol:.1e}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        u = load_matrix(args.matrix)
        d = load_decomposition(args.decomposition)
    except (FormatError, MatrixError, ValueError, OSError) as exc:
        return _fail(EXIT_USAGE, str(exc))
    if u.shape[0] != 1 << d.n:
        return _fail(EXIT_USAGE, f"matrix is {u.shape[0]}x{u.shape[0]} but decomposition is for n={d.n}")
    report = verify(d, u, args.tol)
    print(f"deviation={report.deviation:.3e} tol={args.tol:.1e} {'PASS' if report.passed else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_VERIFY


def _vector_line(v, label: str) -> str:
    return " ".join(str(x) for x in v) + f" | {label}={counting.total_controls(v)}"


def cmd_count(args) -> int:
    limit = counting.MAX_SCHEDULE_QUBITS if args.breakdown else counting.MAX_COUNT_QUBITS
    if not 1 <= args.n <= limit:
        return _fail(EXIT_USAGE, f"n must be in [1, {limit}]")
    print(_vector_line(counting.count_scheme(args.n), "T1"))
    if args.gray:
        print(_vector_line(counting.count_gray(args.n), "T2"))
    if args.breakdown:
        if args.n < 2:
            return _fail(EXIT_USAGE, "breakdown needs n >= 2")
        b = counting.count_breakdown(args.n)
        print("k A B C D g")
        for k, g in enumerate(b.totals()):
            print(k, *b.row(k), g)
    return EXIT_OK


def cmd_compare(args) -> int:
    if not 1 <= args.max <= counting.MAX_COUNT_QUBITS:
        return _fail(EXIT_USAGE, f"--max must be in [1, {counting.MAX_COUNT_QUBITS}]")
    with _output(args.csv) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "T1", "T2", "diff"])
        for r in counting.compare_series(args.max):
            w.writerow([r.n, r.T1, r.T2, r.diff])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recdecomp", description="Decompose n-qubit unitaries into controlled single-qubit gates."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schedule", help="print the symbolic elimination schedule")
    p.add_argument("n", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("random", help="write a Haar-random unitary matrix file")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("decompose", help="decompose a unitary and write gate records")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--random", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--skip-tol", type=float, default=1e-14)
    p.add_argument("--keep-identity", action="store_true", help="record identity gates for skipped slots")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check U_r...U_1 U = I for a matrix and its records")
    p.add_argument("matrix")
    p.add_argument("decomposition")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="gate counts by number of controls")
    p.add_argument("n", type=int)
    p.add_argument("--gray", action="store_true", help="also print the Gray-code scheme counts")
    p.add_argument("--breakdown", action="store_true", help="print the A/B/C/D region table")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("compare", help="T1/T2 total-control series as CSV")
    p.add_argument("--max", type=int, default=50)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
