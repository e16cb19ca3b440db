"""Command-line front end.

Commands
--------
  gen     print the normalized moment matrix
  det     print its determinant           (--method explicit|kernel|oracle)
  inv     print its exact inverse         (--method explicit|kernel|oracle)
  kernel  evaluate the kernel at (x, y)
  verify  run the cross-route check battery; exit 1 if any check fails
  errata  as-printed vs exact jacobi determinant report (informational)

Exit codes: 0 success / all checks passed, 1 verification failure, 2 usage or
validation error.  Exact values serialize as canonical "p/q" strings (bare "p"
for integers); --float emits doubles rounded to --digits significant figures,
and --unnormalized additionally applies the family's total-mass scale.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .closed_form import explicit_det, explicit_inverse, jacobi_det_as_printed, unnormalized_scale
from .elimination import bareiss_det, gauss_inverse
from .gram import det_from_norms, gram_schmidt, kernel_eval, kernel_inverse, moment_matrix
from .orthopoly import Family, FamilySpec, InvalidFamilySpec
from .verify import VerifyReport, verify

__all__ = ["CliRequest", "UsageError", "run", "main"]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class UsageError(ValueError):
    """Bad command line: malformed value, missing argument, invalid parameter."""


@dataclass(frozen=True)
class CliRequest:
    command: str
    family: str
    n: int
    alpha: str | None = None
    beta: str | None = None
    lam: str | None = None
    method: str = "explicit"
    output: str = "pretty"
    as_float: bool = False
    digits: int = 17
    unnormalized: bool = False
    x: str | None = None
    y: str | None = None


def parse_rational(text: str, name: str) -> Fraction:
    """Strict "p/q" / "p" parser; anything else is a usage error."""
    if not _RATIONAL_RE.match(text):
        raise UsageError(f"malformed rational for {name}: {text!r} (expected p or p/q)")
    value = Fraction(text) if "/" not in text else None
    if value is None:
        p, q = text.split("/")
        if int(q) == 0:
            raise UsageError(f"malformed rational for {name}: zero denominator")
        value = Fraction(int(p), int(q))
    return value


def _make_spec(request: CliRequest) -> FamilySpec:
    try:
        family = Family(request.family)
    except ValueError:
        raise UsageError(f"unknown family: {request.family!r}") from None
    kwargs: dict[str, Fraction] = {}
    if request.alpha is not None:
        kwargs["alpha"] = parse_rational(request.alpha, "alpha")
    if request.beta is not None:
        kwargs["beta"] = parse_rational(request.beta, "beta")
    if request.lam is not None:
        kwargs["lam"] = parse_rational(request.lam, "lambda")
    try:
        return FamilySpec(family, **kwargs)
    except InvalidFamilySpec as exc:
        raise UsageError(str(exc)) from None


def _to_float(value: Fraction, request: CliRequest, scale, power: int) -> float:
    if scale is not None:
        with mp.workdps(request.digits + 10):
            scaled = mp.mpf(value.numerator) / value.denominator * scale**power
        result = float(scaled)
    else:
        result = float(value)  # correctly rounded by construction
    if request.digits < 17:
        result = float(f"{result:.{request.digits}g}")
    return result


def _payload(value, request: CliRequest, scale, power: int):
    if isinstance(value, Fraction):
        if request.as_float:
            return _to_float(value, request, scale, power)
        return str(value)
    # matrix: list of rows
    return [[_payload(entry, request, scale, power) for entry in row] for row in value.rows]


def _emit_json(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


def _emit_csv(rows: list[list[object]]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerows(rows)
    sys.stdout.write(buffer.getvalue())


def _pretty_matrix(payload: list[list[object]]) -> str:
    cells = [[str(entry) for entry in row] for row in payload]
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    return "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths)) for row in cells
    )


def _base_doc(request: CliRequest, spec: FamilySpec) -> dict:
    params = {name: str(value) for name, value in spec.params().items()}
    if request.x is not None:
        params["x"] = str(parse_rational(request.x, "x"))
    if request.y is not None:
        params["y"] = str(parse_rational(request.y, "y"))
    return {
        "family": spec.family.value,
        "n": request.n,
        "params": params,
        "method": request.method,
        "normalized": not request.unnormalized,
    }


def run(request: CliRequest) -> int:
    """Execute one request against stdout; returns the process exit code."""
    if request.n < 0:
        raise UsageError("n must be >= 0")
    if request.unnormalized and not request.as_float:
        raise UsageError("--unnormalized requires --float")
    if request.digits < 1:
        raise UsageError("--digits must be >= 1")
    spec = _make_spec(request)

    if request.command == "verify":
        return _run_verify(request, spec)
    if request.command == "errata":
        return _run_errata(request, spec)

    scale = None
    if request.unnormalized:
        scale = unnormalized_scale(spec, request.digits)

    if request.command == "gen":
        value = moment_matrix(spec, request.n)
    elif request.command == "det":
        if request.method == "explicit":
            value = explicit_det(spec, request.n)
        elif request.method == "kernel":
            value = det_from_norms(gram_schmidt(spec, request.n))
        else:
            value = bareiss_det(moment_matrix(spec, request.n))
    elif request.command == "inv":
        if request.method == "explicit":
            value = explicit_inverse(spec, request.n)
        elif request.method == "kernel":
            value = kernel_inverse(gram_schmidt(spec, request.n))
        else:
            value = gauss_inverse(moment_matrix(spec, request.n))
    elif request.command == "kernel":
        if request.x is None or request.y is None:
            raise UsageError("kernel requires --x and --y")
        x = parse_rational(request.x, "x")
        y = parse_rational(request.y, "y")
        value = kernel_eval(gram_schmidt(spec, request.n), x, y)
    else:  # pragma: no cover - argparse limits the choices
        raise UsageError(f"unknown command: {request.command}")

    # how the family's total-mass scale enters each quantity: the matrix
    # scales linearly, its determinant as the (n+1)-fold product, and the
    # inverse / kernel as the reciprocal
    power = {"gen": 1, "det": request.n + 1, "inv": -1, "kernel": -1}[request.command]
    payload = _payload(value, request, scale, power)

    if request.output == "json":
        doc = _base_doc(request, spec)
        if request.command == "det":
            doc["det"] = payload
        else:
            doc["result"] = payload
        _emit_json(doc)
    elif request.output == "csv":
        _emit_csv(payload if isinstance(payload, list) else [[payload]])
    else:
        if isinstance(payload, list):
            sys.stdout.write(_pretty_matrix(payload) + "\n")
        else:
            sys.stdout.write(f"{payload}\n")
    return 0


def _witness_doc(check):
    if check.witness is None:
        return None
    return {
        "row": check.witness.row,
        "col": check.witness.col,
        "expected": str(check.witness.expected),
        "actual": str(check.witness.actual),
    }


def _run_verify(request: CliRequest, spec: FamilySpec) -> int:
    report: VerifyReport = verify(spec, request.n)
    if request.output == "json":
        doc = _base_doc(request, spec)
        doc["checks"] = [
            {"name": c.name, "passed": c.passed, "witness": _witness_doc(c)}
            for c in report.checks
        ]
        doc["passed"] = report.passed
        _emit_json(doc)
    elif request.output == "csv":
        _emit_csv([[c.name, "pass" if c.passed else "fail"] for c in report.checks])
    else:
        width = max(len(c.name) for c in report.checks)
        for c in report.checks:
            line = f"{c.name.ljust(width)}  {'pass' if c.passed else 'FAIL'}"
            if c.witness is not None:
                w = c.witness
                where = "det" if w.row < 0 else f"({w.row},{w.col})"
                line += f"  at {where}: expected {w.expected}, got {w.actual}"
            sys.stdout.write(line + "\n")
        passed = sum(c.passed for c in report.checks)
        sys.stdout.write(f"{passed}/{len(report.checks)} checks passed\n")
    return 0 if report.passed else 1


def _run_errata(request: CliRequest, spec: FamilySpec) -> int:
    if spec.family is not Family.JACOBI:
        raise UsageError("errata applies to the jacobi family only")
    printed, note = jacobi_det_as_printed(spec, request.n, request.digits)
    printed_str = mp.nstr(printed, request.digits) if mp.isfinite(printed) else str(printed)
    exact_float = mp.nstr(mp.mpf(note.exact.numerator) / note.exact.denominator, request.digits)
    verdict = "match" if note.agrees else "MISMATCH"
    if request.output == "json":
        doc = _base_doc(request, spec)
        doc["as_printed"] = printed_str
        doc["exact"] = str(note.exact)
        doc["exact_float"] = exact_float
        doc["rel_error"] = mp.nstr(note.rel_error, 5) if mp.isfinite(note.rel_error) else "inf"
        doc["tolerance"] = mp.nstr(note.tolerance, 5)
        doc["agrees"] = note.agrees
        _emit_json(doc)
    elif request.output == "csv":
        _emit_csv(
            [
                ["as_printed", printed_str],
                ["exact", str(note.exact)],
                ["exact_float", exact_float],
                ["verdict", verdict],
            ]
        )
    else:
        sys.stdout.write(f"as-printed closed form : {printed_str}\n")
        sys.stdout.write(f"exact determinant      : {note.exact} ~ {exact_float}\n")
        rel = mp.nstr(note.rel_error, 5) if mp.isfinite(note.rel_error) else "inf"
        sys.stdout.write(
            f"verdict                : {verdict} (rel err {rel}, tolerance {mp.nstr(note.tolerance, 5)})\n"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hankelinv",
        description="Exact moment matrices of the classical orthogonal families: "
        "determinants, inverses, kernels, and cross-route verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("gen", "print the normalized moment matrix"),
        ("det", "print its determinant"),
        ("inv", "print its exact inverse"),
        ("kernel", "evaluate the kernel at (x, y)"),
        ("verify", "run the cross-route check battery"),
        ("errata", "as-printed vs exact jacobi determinant report"),
    ]:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument(
            "--family",
            required=True,
            choices=[f.value for f in Family],
        )
        cmd.add_argument("--n", required=True, type=int, help="largest index; matrix is (n+1)x(n+1)")
        cmd.add_argument("--alpha")
        cmd.add_argument("--beta")
        cmd.add_argument("--lambda", dest="lam")
        cmd.add_argument("--method", choices=["explicit", "kernel", "oracle"], default="explicit")
        cmd.add_argument("--output", choices=["json", "csv", "pretty"], default="pretty")
        cmd.add_argument("--float", dest="as_float", action="store_true")
        cmd.add_argument("--digits", type=int, default=17)
        cmd.add_argument("--unnormalized", action="store_true")
        if name == "kernel":
            cmd.add_argument("--x", required=True)
            cmd.add_argument("--y", required=True)
    return parser


# options whose values are rationals and may begin with a minus sign;
# argparse would otherwise read "-1/2" as an option name, so such pairs are
# merged into the --option=value form before parsing
_VALUE_OPTIONS = frozenset({"--alpha", "--beta", "--lambda", "--x", "--y"})


def _merge_negative_values(argv: list[str]) -> list[str]:
    merged: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (
            token in _VALUE_OPTIONS
            and i + 1 < len(argv)
            and argv[i + 1].startswith("-")
            and _RATIONAL_RE.match(argv[i + 1])
        ):
            merged.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        merged.append(token)
        i += 1
    return merged


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        namespace = parser.parse_args(_merge_negative_values(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    request = CliRequest(
        command=namespace.command,
        family=namespace.family,
        n=namespace.n,
        alpha=namespace.alpha,
        beta=namespace.beta,
        lam=namespace.lam,
        method=namespace.method,
        output=namespace.output,
        as_float=namespace.as_float,
        digits=namespace.digits,
        unnormalized=namespace.unnormalized,
        x=getattr(namespace, "x", None),
        y=getattr(namespace, "y", None),
    )
    try:
        return run(request)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
