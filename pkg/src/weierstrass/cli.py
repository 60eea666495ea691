"""Command-line front end: solve, certify, radii, and compare-sor.

Problem files hold line-delimited JSON documents (a single document may also
span the whole file, and a top-level array is treated as a batch). Complex
numbers are [re, im] pairs; p = inf is encoded as the string "inf". Reports
are JSON objects with fixed top-level keys input/certificate/trace/result,
one line per problem, with floats at full round-trip precision so identical
inputs produce byte-identical output. Exit codes: 0 success/convergence,
1 input or domain error, 2 non-convergence (or a failed certificate check).
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Sequence

from .certificates import (
    certificate_from_quantity,
    convergence_radius,
    radius_table,
)
from .errors import ParseError, WeierstrassError
from .operator import NormIndex, certificate_quantity, p_norm
from .polynomial import Polynomial
from .solver import SolverOptions, run_sor
from . import __version__

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NOT_CONVERGED = 2

_PROBLEM_KEYS = {
    "coefficients",
    "leading",
    "roots",
    "initial",
    "p",
    "method",
    "h",
    "max_iter",
    "tol_e",
    "tol_step",
}


@dataclass(frozen=True)
class Problem:
    poly: Polynomial
    z0: tuple[complex, ...]
    options: SolverOptions
    echo: dict


def _as_complex(value: Any, where: str) -> complex:
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected a number or [re, im] pair, got {value!r}")
    if isinstance(value, (int, float)):
        return complex(value)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(t, (int, float)) and not isinstance(t, bool) for t in value)
    ):
        return complex(value[0], value[1])
    raise ParseError(f"{where}: expected a number or [re, im] pair, got {value!r}")


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _parse_p(value: Any) -> float:
    if isinstance(value, str):
        if value.lower() == "inf":
            return math.inf
        raise ParseError(f'p must be a number >= 1 or "inf", got {value!r}')
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f'p must be a number >= 1 or "inf", got {value!r}')
    if value < 1:
        raise ParseError(f"p must be at least 1, got {value}")
    return float(value)


def _encode_p(p: float) -> Any:
    return "inf" if math.isinf(p) else p


def parse_problem(doc: Any) -> Problem:
    """Validate one problem document and normalize it into solver inputs."""
    if not isinstance(doc, dict):
        raise ParseError(f"problem document must be a JSON object, got {type(doc).__name__}")
    unknown = set(doc) - _PROBLEM_KEYS
    if unknown:
        raise ParseError(f"unknown keys: {sorted(unknown)}")
    has_coeffs = "coefficients" in doc
    has_roots = "roots" in doc
    if has_coeffs == has_roots:
        raise ParseError('exactly one of "coefficients" or "roots" is required')

    roots: tuple[complex, ...] | None = None
    if has_coeffs:
        raw = doc["coefficients"]
        if not isinstance(raw, list) or len(raw) < 2:
            raise ParseError('"coefficients" must be a list of at least 2 entries')
        coeffs = [_as_complex(c, f"coefficients[{i}]") for i, c in enumerate(raw)]
        leading = _as_complex(doc.get("leading", 1), "leading")
        poly = Polynomial.from_coefficients(coeffs, leading)
        poly_echo: dict = {"coefficients": [_pair(c) for c in poly.coeffs]}
    else:
        raw = doc["roots"]
        if not isinstance(raw, list) or len(raw) < 2:
            raise ParseError('"roots" must be a list of at least 2 entries')
        roots = tuple(_as_complex(r, f"roots[{i}]") for i, r in enumerate(raw))
        poly = Polynomial.from_roots(roots)
        poly_echo = {"roots": [_pair(r) for r in roots]}

    n = poly.degree
    if "initial" not in doc:
        raise ParseError('"initial" is required')
    raw_initial = doc["initial"]
    if isinstance(raw_initial, dict):
        if set(raw_initial) != {"perturb_roots"}:
            raise ParseError('"initial" object form must be {"perturb_roots": eps}')
        if roots is None:
            raise ParseError('"perturb_roots" needs the polynomial given by its roots')
        eps = raw_initial["perturb_roots"]
        if isinstance(eps, bool) or not isinstance(eps, (int, float)) or eps <= 0:
            raise ParseError(f'"perturb_roots" must be a positive number, got {eps!r}')
        # Deterministic unit directions at angles 2*pi*i/n, no RNG involved.
        z0 = tuple(
            r + eps * cmath.exp(2j * cmath.pi * i / n) for i, r in enumerate(roots)
        )
    elif isinstance(raw_initial, list):
        if len(raw_initial) != n:
            raise ParseError(f'"initial" has {len(raw_initial)} entries, polynomial degree is {n}')
        z0 = tuple(_as_complex(v, f"initial[{i}]") for i, v in enumerate(raw_initial))
    else:
        raise ParseError('"initial" must be a list of points or {"perturb_roots": eps}')

    p_value = _parse_p(doc.get("p", "inf"))
    method = doc.get("method", "plain")
    if not isinstance(method, str):
        raise ParseError(f'"method" must be a string, got {method!r}')
    h = doc.get("h", 1.0)
    if isinstance(h, bool) or not isinstance(h, (int, float)):
        raise ParseError(f'"h" must be a number, got {h!r}')
    max_iter = doc.get("max_iter", 100)
    if isinstance(max_iter, bool) or not isinstance(max_iter, int):
        raise ParseError(f'"max_iter" must be an integer, got {max_iter!r}')
    tol_e = doc.get("tol_e", 1e-13)
    tol_step = doc.get("tol_step", 0.0)
    for name, value in (("tol_e", tol_e), ("tol_step", tol_step)):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ParseError(f'"{name}" must be a number, got {value!r}')
    try:
        options = SolverOptions(
            p=NormIndex(p_value),
            mode=method,
            h=float(h),
            max_iter=max_iter,
            tol_e=float(tol_e),
            tol_step=float(tol_step),
        )
    except ValueError as exc:
        raise ParseError(str(exc))

    echo = dict(poly_echo)
    echo.update(
        {
            "initial": [_pair(z) for z in z0],
            "p": _encode_p(p_value),
            "method": method,
            "h": float(h),
            "max_iter": max_iter,
            "tol_e": float(tol_e),
            "tol_step": float(tol_step),
        }
    )
    return Problem(poly=poly, z0=z0, options=options, echo=echo)


def load_documents(path: str) -> list[Any]:
    """Read problem documents: one JSON per line, or one document per file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        docs = []
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            try:
                docs.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path}:{lineno}: invalid JSON: {exc}")
        if not docs:
            raise ParseError(f"{path}: no JSON documents found")
        return docs
    return doc if isinstance(doc, list) else [doc]


def _encode(obj: Any) -> Any:
    """Make a report JSON-safe: non-finite floats become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        if math.isnan(obj):
            return "nan"
        return obj
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    if isinstance(obj, dict):
        return {key: _encode(value) for key, value in obj.items()}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _certificate_block(e0: float, n: int, p: NormIndex) -> dict:
    cert = certificate_from_quantity(e0, n, p)
    return {
        "e0": cert.e0,
        "lambda": cert.lam,
        "theta": cert.theta,
        "satisfied": cert.satisfied,
        "strict": cert.strict,
        "radius": convergence_radius(n, p),
    }


def _trace_block(trace) -> dict:
    return {
        "converged": trace.converged,
        "error": trace.error,
        "records": [
            {
                "k": r.k,
                "e": r.e,
                "w_norm": r.w_norm,
                "step_norm": r.step_norm,
                "h": r.h,
                "lambda": r.lam,
                "theta": r.theta,
                "apost_bound": r.apost_bound,
            }
            for r in trace.records
        ],
        "apriori_curve": list(trace.apriori_curve),
    }


def _steps_taken(trace) -> int:
    last = trace.records[-1]
    return last.k if trace.final == last.z else last.k + 1


def solve_report(problem: Problem) -> tuple[dict, int]:
    trace = run_sor(problem.poly, problem.z0, problem.options)
    n, p = problem.poly.degree, problem.options.p
    report = {
        "input": problem.echo,
        "certificate": _certificate_block(trace.certificate.e0, n, p),
        "trace": _trace_block(trace),
        "result": {
            "converged": trace.converged,
            "iterations": _steps_taken(trace),
            "roots": [_pair(z) for z in trace.final],
        },
    }
    return report, EXIT_OK if trace.converged else EXIT_NOT_CONVERGED


def certify_report(problem: Problem) -> tuple[dict, int]:
    n, p = problem.poly.degree, problem.options.p
    data = certificate_quantity(problem.poly, problem.z0, p)
    cert = certificate_from_quantity(data.e, n, p)
    entries, omitted = radius_table(n, p)
    checks = []
    for entry in entries:
        if entry.kind == "ratio":
            quantity = data.e
        else:
            quantity = p_norm(data.w, entry.norm) / data.delta
        checks.append(
            {
                "name": entry.name,
                "kind": entry.kind,
                "threshold": entry.value,
                "quantity": quantity,
                "pass": quantity <= entry.value,
            }
        )
    report = {
        "input": problem.echo,
        "certificate": _certificate_block(data.e, n, p),
        "trace": None,
        "result": {
            "satisfied": cert.satisfied,
            "strict": cert.strict,
            "thresholds": checks,
            "omitted": [{"name": name, "reason": reason} for name, reason in omitted],
        },
    }
    return report, EXIT_OK if cert.satisfied else EXIT_NOT_CONVERGED


def radii_report(n: int, p_value: float) -> tuple[dict, int]:
    entries, omitted = radius_table(n, NormIndex(p_value))
    report = {
        "input": {"n": n, "p": _encode_p(p_value)},
        "certificate": None,
        "trace": None,
        "result": {
            "radii": [
                {
                    "name": entry.name,
                    "value": entry.value,
                    "kind": entry.kind,
                    "majorant": entry.majorant_at_value,
                }
                for entry in entries
            ],
            "omitted": [{"name": name, "reason": reason} for name, reason in omitted],
        },
    }
    return report, EXIT_OK


def compare_sor_report(problem: Problem) -> tuple[dict, int]:
    runs = {}
    for label, mode in (("wz", "sor_wz"), ("new", "sor_new")):
        trace = run_sor(problem.poly, problem.z0, replace(problem.options, mode=mode))
        runs[label] = trace
    ratios = []
    wz_h = [r.h for r in runs["wz"].records]
    new_h = [r.h for r in runs["new"].records]
    for k in range(min(len(wz_h), len(new_h))):
        if new_h[k] < 1.0:
            ratios.append(
                {"k": k, "h_new": new_h[k], "h_wz": wz_h[k], "ratio": new_h[k] / wz_h[k]}
            )
    n, p = problem.poly.degree, problem.options.p
    report = {
        "input": problem.echo,
        "certificate": _certificate_block(runs["wz"].certificate.e0, n, p),
        "trace": {label: _trace_block(trace) for label, trace in runs.items()},
        "result": {
            "wz": {
                "converged": runs["wz"].converged,
                "iterations": _steps_taken(runs["wz"]),
                "h": wz_h,
            },
            "new": {
                "converged": runs["new"].converged,
                "iterations": _steps_taken(runs["new"]),
                "h": new_h,
            },
            "ratios": ratios,
        },
    }
    ok = runs["wz"].converged and runs["new"].converged
    return report, EXIT_OK if ok else EXIT_NOT_CONVERGED


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------


def _fmt(x: Any) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return f"{x:.6e}"
    return str(x)


def _certificate_text(block: dict) -> list[str]:
    return [
        "certificate: "
        f"E0={_fmt(block['e0'])} lambda={_fmt(block['lambda'])} theta={_fmt(block['theta'])} "
        f"satisfied={'yes' if block['satisfied'] else 'no'} "
        f"strict={'yes' if block['strict'] else 'no'} radius={_fmt(block['radius'])}"
    ]


def _records_text(records: list[dict]) -> list[str]:
    lines = [f"{'k':>4} {'E':>13} {'step norm':>13} {'h':>10} {'apost bound':>13}"]
    for r in records:
        lines.append(
            f"{r['k']:>4} {_fmt(r['e']):>13} {_fmt(r['step_norm']):>13} "
            f"{_fmt(r['h']):>10} {_fmt(r['apost_bound']):>13}"
        )
    return lines


def _solve_text(report: dict) -> str:
    lines = _certificate_text(report["certificate"])
    lines += _records_text(report["trace"]["records"])
    if report["trace"]["error"]:
        lines.append(f"error: {report['trace']['error']}")
    lines.append("roots:")
    for re_part, im_part in report["result"]["roots"]:
        lines.append(f"  {re_part!r} {'+' if im_part >= 0 else '-'} {abs(im_part)!r}j")
    lines.append(
        f"converged: {'yes' if report['result']['converged'] else 'no'} "
        f"({report['result']['iterations']} steps)"
    )
    return "\n".join(lines)


def _certify_text(report: dict) -> str:
    lines = _certificate_text(report["certificate"])
    lines.append(f"{'name':<20} {'kind':<14} {'threshold':>13} {'quantity':>13}  verdict")
    for row in report["result"]["thresholds"]:
        lines.append(
            f"{row['name']:<20} {row['kind']:<14} {_fmt(row['threshold']):>13} "
            f"{_fmt(row['quantity']):>13}  {'pass' if row['pass'] else 'fail'}"
        )
    for row in report["result"]["omitted"]:
        lines.append(f"{row['name']:<20} omitted ({row['reason']})")
    return "\n".join(lines)


def _radii_text(report: dict) -> str:
    lines = [f"{'name':<20} {'kind':<14} {'value':>13} {'majorant':>13}"]
    for row in report["result"]["radii"]:
        lines.append(
            f"{row['name']:<20} {row['kind']:<14} {_fmt(row['value']):>13} "
            f"{_fmt(row['majorant']):>13}"
        )
    for row in report["result"]["omitted"]:
        lines.append(f"{row['name']:<20} omitted ({row['reason']})")
    return "\n".join(lines)


def _compare_text(report: dict) -> str:
    result = report["result"]
    lines = [
        f"wz : converged={'yes' if result['wz']['converged'] else 'no'} "
        f"iterations={result['wz']['iterations']}",
        f"new: converged={'yes' if result['new']['converged'] else 'no'} "
        f"iterations={result['new']['iterations']}",
        f"{'k':>4} {'h_new':>12} {'h_wz':>12} {'ratio':>10}",
    ]
    for row in result["ratios"]:
        lines.append(
            f"{row['k']:>4} {_fmt(row['h_new']):>12} {_fmt(row['h_wz']):>12} "
            f"{row['ratio']:.6f}"
        )
    if not result["ratios"]:
        lines.append("  (no damped steps: h_new = 1 throughout)")
    return "\n".join(lines)


_TEXT_RENDERERS = {
    "solve": _solve_text,
    "certify": _certify_text,
    "radii": _radii_text,
    "compare-sor": _compare_text,
}


def _emit(command: str, report: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(_encode(report)))
    else:
        print(_TEXT_RENDERERS[command](report))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weierstrass",
        description="Simultaneous polynomial root finding with certified convergence.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--output", choices=("json", "text"), default="json", help="report format"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, desc in (
        ("solve", "run the iteration on each problem in FILE"),
        ("certify", "evaluate the initial-point certificate without iterating"),
        ("compare-sor", "run both damped variants and compare their parameters"),
    ):
        cmd = sub.add_parser(name, help=desc)
        cmd.add_argument("file", help="problem file (line-delimited JSON)")
    radii = sub.add_parser("radii", help="tabulate certified radii for a degree and norm")
    radii.add_argument("--n", type=int, required=True, help="polynomial degree (>= 2)")
    radii.add_argument("--p", default="inf", help='norm exponent, a number >= 1 or "inf"')
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "radii":
            if args.n < 2:
                raise ParseError(f"--n must be at least 2, got {args.n}")
            p_value = _parse_p(args.p if args.p == "inf" else _number(args.p))
            report, code = radii_report(args.n, p_value)
            _emit("radii", report, args.output)
            return code
        builders = {
            "solve": solve_report,
            "certify": certify_report,
            "compare-sor": compare_sor_report,
        }
        builder = builders[args.command]
        worst = EXIT_OK
        for doc in load_documents(args.file):
            report, code = builder(parse_problem(doc))
            _emit(args.command, report, args.output)
            worst = max(worst, code)
        return worst
    except (WeierstrassError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def _number(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ParseError(f'--p must be a number or "inf", got {text!r}')


if __name__ == "__main__":
    sys.exit(main())
