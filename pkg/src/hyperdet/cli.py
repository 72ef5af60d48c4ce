"""Command-line front end.

Six subcommands: invariant, dims, orbit, eval, transform, verify-paper.
Machine output goes to standard output (or --out files); diagnostics go to
standard error.  Identical invocations produce byte-identical output.

Exit codes: 0 success, 1 verification failure, 2 empty result, 3 shape
mismatch, 4 parse error (bad flags, malformed values, unreadable files).
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrays import (
    ModeMatrix,
    ShapeMismatchError,
    array_from_json_bytes,
    array_to_json_bytes,
    evaluate,
    mode_matrix_from_json_bytes,
    mode_transform,
)
from .dimensions import (
    FORMULA_IDS,
    formula_coefficients,
    interpolate_dims,
    table_column,
    verify_table,
)
from .operators import assemble_matrix, exact_kernel
from .orbits import signed_orbit
from .polynomials import (
    IntPolynomial,
    exps_from_digits,
    from_json_bytes,
    to_json_bytes,
    to_letter_text,
)
from .verify import run_checks
from .weights import check_weight, count_dim, zero_weight


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _parse_shape(text: str) -> tuple[int, int, int]:
    parts = text.lower().split("x")
    if len(parts) != 3 or not all(p.isdigit() and int(p) >= 1 for p in parts):
        raise CommandError(4, f"bad shape {text!r}; expected AxBxC, e.g. 2x2x3")
    return tuple(int(p) for p in parts)


def _parse_weight(text: str, shape) -> tuple[int, ...]:
    try:
        weight = tuple(int(p) for p in text.split(","))
        return check_weight(shape, weight)
    except ValueError as exc:
        raise CommandError(4, f"bad weight {text!r}: {exc}") from exc


def _parse_degrees(text: str) -> list[int]:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return [int(parts[0])]
        if len(parts) != 3:
            raise ValueError("expected START:END:STEP")
        start, end, step = (int(p) for p in parts)
        if step <= 0 or start < 0:
            raise ValueError("need START >= 0 and STEP > 0")
        return list(range(start, end + 1, step))
    except ValueError as exc:
        raise CommandError(4, f"bad degree range {text!r}: {exc}") from exc


def _read_file(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise CommandError(4, f"cannot read {path}: {exc}") from exc


def _emit(data: bytes, out_path: str | None) -> None:
    if out_path:
        try:
            with open(out_path, "wb") as fh:
                fh.write(data)
        except OSError as exc:
            raise CommandError(4, f"cannot write {out_path}: {exc}") from exc
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _render_polys(polys: list[IntPolynomial], fmt: str) -> bytes:
    if fmt == "json":
        return b"".join(to_json_bytes(p) for p in polys)
    try:
        texts = [to_letter_text(p) for p in polys]
    except ValueError as exc:
        raise CommandError(4, str(exc)) from exc
    return "\n".join(texts).encode("ascii")


def run_invariant(shape, degree: int, out_path: str | None, fmt: str) -> int:
    if degree < 0:
        raise CommandError(4, f"degree must be >= 0, got {degree}")
    matrix = assemble_matrix(shape, degree)
    if matrix.ncols == 0:
        print(
            f"no weight-zero monomials of degree {degree} for shape "
            f"{'x'.join(map(str, shape))}",
            file=sys.stderr,
        )
        return 2
    kernel = exact_kernel(matrix)
    if kernel.nullity == 0:
        print(f"no invariant of degree {degree} (kernel is trivial)", file=sys.stderr)
        return 2
    polys = [
        IntPolynomial(shape, [(m, c) for m, c in zip(matrix.domain.monomials, vec) if c])
        for vec in kernel.basis
    ]
    _emit(_render_polys(polys, fmt), out_path)
    print(
        f"kernel dimension {kernel.nullity}; "
        f"{', '.join(str(len(p)) + ' terms' for p in polys)}",
        file=sys.stderr,
    )
    return 0


def run_dims(shape, weight, degrees: list[int], verify_conjecture: bool) -> int:
    if verify_conjecture:
        return _run_dims_conjecture(shape)
    if not degrees:
        print("empty degree range", file=sys.stderr)
        return 2
    lines = []
    for n in degrees:
        lines.append(f"{n}\t{count_dim(shape, n, weight)}\n")
    _emit("".join(lines).encode("ascii"), None)
    return 0


def _run_dims_conjecture(shape) -> int:
    try:
        report = verify_table(shape)
    except ValueError as exc:
        raise CommandError(4, str(exc)) from exc
    entries = [
        {
            "n": e.n,
            "column": e.column,
            "counted": e.counted,
            "fixture": e.fixture,
            "formula": str(e.formula),
            "match": e.ok,
        }
        for e in report.entries
    ]
    interpolation = []
    inter_ok = True
    for formula_id in FORMULA_IDS:
        try:
            fitted = interpolate_dims(table_column(formula_id))
            matches = fitted == formula_coefficients(formula_id)
            interpolation.append(
                {
                    "column": formula_id,
                    "degree": len(fitted) - 1,
                    "matches_formula": matches,
                }
            )
            inter_ok = inter_ok and matches
        except ValueError as exc:
            interpolation.append({"column": formula_id, "error": str(exc)})
            inter_ok = False
    ok = report.ok and inter_ok
    doc = {
        "shape": list(shape),
        "entries": entries,
        "interpolation": interpolation,
        "ok": ok,
    }
    _emit(json.dumps(doc, separators=(",", ":")).encode("ascii") + b"\n", None)
    return 0 if ok else 1


def run_orbit(seed: str, fmt: str, out_path: str | None = None) -> int:
    if len(seed) != 12 or not seed.isdigit():
        raise CommandError(4, f"seed must be a 12-digit exponent string, got {seed!r}")
    poly = signed_orbit(exps_from_digits(seed))
    if poly.is_zero:
        print("signed orbit cancels to zero", file=sys.stderr)
        return 2
    _emit(_render_polys([poly], fmt), out_path)
    return 0


def run_eval(poly_path: str, array_path: str) -> int:
    try:
        poly = from_json_bytes(_read_file(poly_path))
        arr = array_from_json_bytes(_read_file(array_path))
    except ValueError as exc:
        raise CommandError(4, str(exc)) from exc
    value = evaluate(poly, arr)
    _emit(f"{value}\n".encode("ascii"), None)
    return 0


def run_transform(array_path: str, mode: int, matrix_path: str) -> int:
    if mode not in (1, 2, 3):
        raise CommandError(4, f"mode must be 1, 2 or 3, got {mode}")
    try:
        arr = array_from_json_bytes(_read_file(array_path))
        matrix = mode_matrix_from_json_bytes(_read_file(matrix_path))
    except ValueError as exc:
        raise CommandError(4, str(exc)) from exc
    moved = mode_transform(arr, ModeMatrix(mode, matrix))
    _emit(array_to_json_bytes(moved), None)
    return 0


def run_verify_paper(only: str | None = None, seed: int = 1729) -> int:
    results = run_checks(only=only, seed=seed)
    if not results:
        print(f"no checks match {only!r}", file=sys.stderr)
        return 2
    lines = []
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        lines.append(f"{status} {res.name}: {res.detail}\n")
    _emit("".join(lines).encode("ascii"), None)
    passed = sum(1 for r in results if r.ok)
    print(f"{passed}/{len(results)} checks passed", file=sys.stderr)
    return 0 if passed == len(results) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperdet",
        description="Exact invariants of small 3-way arrays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="derive the invariant of a shape and degree")
    p.add_argument("--shape", required=True)
    p.add_argument("--degree", required=True, type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("dims", help="weight-space dimensions")
    p.add_argument("--shape", required=True)
    p.add_argument("--weight")
    p.add_argument("--degrees", default="0:96:6")
    p.add_argument("--verify-conjecture", action="store_true")

    p = sub.add_parser("orbit", help="signed orbit of a monomial")
    p.add_argument("--seed", required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")

    p = sub.add_parser("eval", help="evaluate a polynomial on an array")
    p.add_argument("--poly", required=True)
    p.add_argument("--array", required=True)

    p = sub.add_parser("transform", help="apply a mode matrix to an array")
    p.add_argument("--array", required=True)
    p.add_argument("--mode", required=True, type=int)
    p.add_argument("--matrix", required=True)

    p = sub.add_parser("verify-paper", help="run the verification battery")
    p.add_argument("--only")
    p.add_argument("--seed", type=int, default=1729)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 4

    try:
        if args.command == "invariant":
            shape = _parse_shape(args.shape)
            return run_invariant(shape, args.degree, args.out, args.format)
        if args.command == "dims":
            shape = _parse_shape(args.shape)
            weight = (
                _parse_weight(args.weight, shape)
                if args.weight
                else zero_weight(shape)
            )
            return run_dims(
                shape, weight, _parse_degrees(args.degrees), args.verify_conjecture
            )
        if args.command == "orbit":
            return run_orbit(args.seed, args.format, args.out)
        if args.command == "eval":
            return run_eval(args.poly, args.array)
        if args.command == "transform":
            return run_transform(args.array, args.mode, args.matrix)
        if args.command == "verify-paper":
            return run_verify_paper(args.only, args.seed)
        raise CommandError(4, f"unknown command {args.command!r}")
    except CommandError as exc:
        print(exc.message, file=sys.stderr)
        return exc.code
    except ShapeMismatchError as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
