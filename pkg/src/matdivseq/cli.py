"""Command-line interface: table reproduction, verification, inspection.

Subcommands: ``table``, ``verify``, ``charpoly``, ``jacobian``. Matrices
are read from a file (or stdin with ``-``) in either of two formats:

* JSON: ``{"matrix": [[1, -2, -6], [0, 1, 3], [-1, 0, 1]], "name": "X3"}``
* plain text: one row per line, whitespace-separated integers

Exit codes: 0 success, 1 verification failure, 2 input error. Large
integers in JSON output are rendered as decimal strings so consumers do
not lose precision.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .factorint import Factorization, factorize
from .linalg import IntMatrix, jacobian_power_map
from .polynomials import char_poly
from .sequences import (SequenceEntry, VerificationReport, generate_sequence,
                        jacobian_determinant, verify_closed_form, verify_divisibility)


class MatrixParseError(ValueError):
    """Input document could not be turned into a square integer matrix."""


@dataclass(frozen=True)
class MatrixDocument:
    """A parsed input matrix plus its optional name."""

    matrix: IntMatrix
    name: str | None = None


def _require_int(v) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise MatrixParseError("integer entries required")
    return v


def _matrix_from_rows(rows) -> IntMatrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise MatrixParseError("matrix must be a non-empty list of rows")
    if any(len(r) != len(rows) for r in rows):
        raise MatrixParseError("matrix must be square")
    return IntMatrix(tuple(tuple(_require_int(v) for v in row) for row in rows))


def parse_matrix(text: str) -> MatrixDocument:
    """Parse a matrix document in JSON or plain-text row format."""
    stripped = text.lstrip()
    if not stripped:
        raise MatrixParseError("empty input")
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MatrixParseError(
                f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
        if not isinstance(obj, dict) or "matrix" not in obj:
            raise MatrixParseError('expected an object with a "matrix" key')
        name = obj.get("name")
        if name is not None and not isinstance(name, str):
            raise MatrixParseError('"name" must be a string')
        return MatrixDocument(matrix=_matrix_from_rows(obj["matrix"]), name=name)
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = []
        for token in line.split():
            try:
                row.append(int(token, 10))
            except ValueError:
                raise MatrixParseError(
                    f"integer entries required (line {lineno}: {token!r})") from None
        rows.append(row)
    if not rows:
        raise MatrixParseError("empty input")
    if any(len(r) != len(rows) for r in rows):
        raise MatrixParseError("matrix must be square")
    return MatrixDocument(matrix=IntMatrix(tuple(tuple(r) for r in rows)))


def _matrix_rows(x: IntMatrix) -> list[list[int]]:
    return [list(row) for row in x.entries]


def _factorization_json(f: Factorization) -> dict:
    return {
        "sign": f.sign,
        "factors": [[str(p), e] for p, e in f.factors],
        "cofactor": str(f.cofactor) if f.cofactor is not None else None,
        "display": str(f),
    }


def _opt_str(v: int | None) -> str | None:
    return str(v) if v is not None else None


def run_table(doc: MatrixDocument, n_max: int, fmt: str = "text",
              factor: bool = False, column: str = "reduced") -> tuple[str, int]:
    """Render the sequence table for n = 1..n_max in the requested format."""
    x = doc.matrix
    entries = generate_sequence(x, n_max, with_factorization=factor and column == "reduced")

    def cell(e: SequenceEntry) -> int | None:
        return e.reduced if column == "reduced" else e.jacobian_det

    def factor_cell(e: SequenceEntry) -> Factorization | None:
        if not factor:
            return None
        if column == "jacobian":
            return factorize(e.jacobian_det)
        return e.factorization

    if fmt == "json":
        payload = {
            "name": doc.name,
            "matrix": _matrix_rows(x),
            "column": column,
            "entries": [],
        }
        for e in entries:
            item = {
                "n": e.n,
                "reduced": _opt_str(e.reduced),
                "jacobian_det": str(e.jacobian_det),
                "n_squared_value": _opt_str(e.n_squared_value),
                "fallback_used": e.fallback_used,
            }
            fc = factor_cell(e)
            if fc is not None:
                item["factorization"] = _factorization_json(fc)
            payload["entries"].append(item)
        return json.dumps(payload, indent=2), 0

    lines = []
    sep = "," if fmt == "csv" else " | "
    for e in entries:
        v = cell(e)
        parts = [str(e.n), str(v) if v is not None else ("-" if fmt == "text" else "")]
        fc = factor_cell(e)
        if fc is not None:
            parts.append(str(fc))
        lines.append(sep.join(parts))
    return "\n".join(lines), 0


def _render_verify_text(doc: MatrixDocument, n_max: int, cf: VerificationReport,
                        div_reports: list[VerificationReport], passed: bool) -> str:
    lines = [f"matrix: {doc.name or doc.matrix.fingerprint()}",
             f"checked n = 1..{n_max}"]
    if cf.mismatches:
        lines.append(f"closed form vs Jacobian determinant: {len(cf.mismatches)} mismatches")
        lines.extend(f"  FAIL {m}" for m in cf.mismatches)
    else:
        lines.append("closed form vs Jacobian determinant: OK")
    for note in cf.notes:
        lines.append(f"note: {note}")
    for rep in div_reports:
        good = sum(1 for p in rep.pairs if p.passed)
        lines.append(f"divisibility ({rep.column} column): {good}/{len(rep.pairs)} pairs pass")
        lines.extend(f"  FAIL {p.n} | {p.m}" for p in rep.pairs if not p.passed)
        for note in rep.notes:
            lines.append(f"note: {note}")
    lines.append(f"result: {'PASS' if passed else 'FAIL'}")
    return "\n".join(lines)


def run_verify(doc: MatrixDocument, n_max: int, fmt: str = "text") -> tuple[str, int]:
    """Closed-form and divisibility verification; exit 1 on any hard failure."""
    x = doc.matrix
    cf = verify_closed_form(x, n_max)
    entries = generate_sequence(x, n_max)
    div_reports = [verify_divisibility(entries, col, x.fingerprint())
                   for col in ("jacobian", "reduced")]
    passed = cf.passed and all(r.passed for r in div_reports)
    code = 0 if passed else 1

    if fmt == "json":
        payload = {
            "name": doc.name,
            "matrix": _matrix_rows(x),
            "n_max": n_max,
            "passed": passed,
            "closed_form": {"mismatches": list(cf.mismatches), "notes": list(cf.notes)},
            "divisibility": {
                rep.column: {
                    "pairs_checked": len(rep.pairs),
                    "failures": [[p.n, p.m] for p in rep.pairs if not p.passed],
                    "notes": list(rep.notes),
                }
                for rep in div_reports
            },
        }
        return json.dumps(payload, indent=2), code

    if fmt == "csv":
        lines = ["closed_form," + ("pass" if cf.passed else "fail")]
        lines.extend(f"divisibility_{rep.column}," + ("pass" if rep.passed else "fail")
                     for rep in div_reports)
        for note in cf.notes:
            lines.append(f"note,{note}")
        lines.append("result," + ("pass" if passed else "fail"))
        return "\n".join(lines), code

    return _render_verify_text(doc, n_max, cf, div_reports, passed), code


def run_charpoly(doc: MatrixDocument, fmt: str = "text") -> tuple[str, int]:
    """Render the characteristic polynomial of the input matrix."""
    f = char_poly(doc.matrix)
    if fmt == "json":
        payload = {
            "dim": doc.matrix.dim,
            "polynomial": str(f),
            "coefficients": [str(c) for c in f.coefficients],
        }
        return json.dumps(payload, indent=2), 0
    if fmt == "csv":
        return ",".join(str(c) for c in f.coefficients), 0
    coeffs = ", ".join(str(c) for c in f.coefficients)
    return f"characteristic polynomial: {f}\ncoefficients: [{coeffs}]", 0


def run_jacobian(doc: MatrixDocument, n: int, fmt: str = "text") -> tuple[str, int]:
    """Render the power-map derivative matrix at n and its determinant."""
    j = jacobian_power_map(doc.matrix, n)
    det = jacobian_determinant(doc.matrix, n)
    if fmt == "json":
        payload = {
            "n": n,
            "dim": j.dim,
            "entries": [[str(v) for v in row] for row in j.entries],
            "det": str(det),
        }
        return json.dumps(payload, indent=2), 0
    if fmt == "csv":
        lines = [",".join(str(v) for v in row) for row in j.entries]
        lines.append(f"det,{det}")
        return "\n".join(lines), 0
    lines = [f"derivative of X -> X^{n} is {j.dim}x{j.dim}", str(j), f"det: {det}"]
    return "\n".join(lines), 0


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matdivseq",
        description="Determinant divisibility sequences of matrix power maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("matrix", help="matrix file (JSON or rows of integers), '-' for stdin")
        p.add_argument("--format", choices=("text", "csv", "json"), default="text",
                       help="output format (default: text)")

    p_table = sub.add_parser("table", help="sequence values, optionally factorized")
    add_common(p_table)
    p_table.add_argument("--n-max", type=int, default=16,
                         help="largest n to compute (default: 16)")
    p_table.add_argument("--factor", action="store_true",
                         help="attach factorizations")
    p_table.add_argument("--column", choices=("reduced", "jacobian"), default="reduced",
                         help="value column to print (default: reduced)")

    p_verify = sub.add_parser("verify", help="check closed form and divisibility")
    add_common(p_verify)
    p_verify.add_argument("--n-max", type=int, default=16,
                          help="largest n to check (default: 16)")

    p_charpoly = sub.add_parser("charpoly", help="characteristic polynomial")
    add_common(p_charpoly)

    p_jacobian = sub.add_parser("jacobian", help="power-map derivative matrix and det")
    add_common(p_jacobian)
    p_jacobian.add_argument("--n", type=int, default=2,
                            help="power to differentiate (default: 2)")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = parse_matrix(_read_input(args.matrix))
        if args.command == "table":
            if args.n_max < 1:
                raise MatrixParseError("--n-max must be positive")
            out, code = run_table(doc, args.n_max, args.format, args.factor, args.column)
        elif args.command == "verify":
            if args.n_max < 1:
                raise MatrixParseError("--n-max must be positive")
            out, code = run_verify(doc, args.n_max, args.format)
        elif args.command == "charpoly":
            out, code = run_charpoly(doc, args.format)
        else:
            if args.n < 1:
                raise MatrixParseError("--n must be positive")
            out, code = run_jacobian(doc, args.n, args.format)
    except (MatrixParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
