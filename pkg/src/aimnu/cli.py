"""Command-line interface.

Commands: list, solve, aim, eigenfunction, nu, verify.  Rationals on the
command line and in problem files are exact "p/q" strings; floating
literals are accepted only for sample-grid bounds.  csv/json output is
byte-deterministic for identical invocations.

Exit codes: 0 success, 1 verification or convergence failure,
2 invalid input.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from fractions import Fraction

import click

from . import aim as aim_mod
from . import catalog as catalog_mod
from . import eigenfunctions as eig_mod
from . import hypergeometric as hg
from . import nu as nu_mod
from . import verify as verify_mod
from .algebra import Poly
from .errors import (
    AimnuError,
    BadParameter,
    DegenerateParameterMap,
    InvalidRational,
    NoRationalReduction,
    NoRootInBracket,
    NotHypergeometricType,
    OutOfRange,
    PochhammerPole,
    UnknownEntry,
    UnsupportedDenominator,
)
from .rationals import format_rational, parse_rational

_INPUT_ERRORS = (
    InvalidRational,
    BadParameter,
    UnknownEntry,
    NotHypergeometricType,
    OutOfRange,
    json.JSONDecodeError,
    KeyError,
    ValueError,
)
_RUNTIME_ERRORS = (
    DegenerateParameterMap,
    NoRootInBracket,
    NoRationalReduction,
    PochhammerPole,
    UnsupportedDenominator,
)


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _parse_params(pairs: tuple[str, ...]) -> dict[str, Fraction]:
    params = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep:
            raise BadParameter(f"expected name=value, got {pair!r}")
        params[name.strip()] = parse_rational(value)
    return params


def _load_problem(name_or_file: str, params: dict) -> tuple[str, hg.HypergeometricProblem]:
    """Catalog name, or a JSON problem file when the argument looks like a path."""
    if name_or_file.endswith(".json") or os.path.sep in name_or_file:
        with open(name_or_file, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        return _problem_from_doc(doc)
    return name_or_file, catalog_mod.catalog_get(name_or_file, params)


def _affine_coeff(entry) -> tuple[Fraction, Fraction]:
    if isinstance(entry, str):
        return parse_rational(entry), Fraction(0)
    return (
        parse_rational(entry.get("const", "0")),
        parse_rational(entry.get("param", "0")),
    )


def _problem_from_doc(doc: dict) -> tuple[str, hg.HypergeometricProblem]:
    tau = doc["tau"]
    r0c, r0p = _affine_coeff(tau.get("r0", "0"))
    r1c, r1p = _affine_coeff(tau.get("r1", "0"))
    sigma = Poly([parse_rational(c) for c in doc["sigma"]])
    g_const, g_param = _affine_coeff(doc["gamma"])
    domain = tuple(
        parse_rational(v) if v is not None else None for v in doc.get("domain", (None, None))
    )
    eval_point = (
        parse_rational(doc["evalPoint"]) if "evalPoint" in doc else None
    )
    problem = hg.validate(
        hg.AffinePoly(Poly([r0c, r1c]), Poly([r0p, r1p])),
        sigma,
        hg.AffineValue(g_const, g_param),
        doc.get("parameter", "p"),
        domain,
        eval_point,
    )
    return doc.get("name", "problem"), problem


def _parse_bracket(text: str) -> tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise BadParameter(f"expected lo:hi, got {text!r}")
    return parse_rational(lo), parse_rational(hi)


def _emit(fmt: str, header: list[str], rows: list[list[str]], envelope: dict):
    """Render rows as table/csv, or the full envelope as stable json."""
    if fmt == "json":
        click.echo(json.dumps(envelope, indent=2, sort_keys=True))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(rows)
        click.echo(buf.getvalue(), nl=False)
    else:
        widths = [
            max(len(header[i]), *(len(row[i]) for row in rows)) if rows else len(header[i])
            for i in range(len(header))
        ]
        click.echo("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
        for row in rows:
            click.echo("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())


_FORMAT = click.option(
    "--format", "fmt", type=click.Choice(["table", "csv", "json"]), default="table"
)
_PARAM = click.option("--param", "params", multiple=True, help="name=value, value a rational p/q")


@click.group()
def main():
    """Exact eigensolver for hypergeometric-type equations."""


@main.command("list")
@click.option("--filter", "substring", default=None)
@_FORMAT
def cmd_list(substring, fmt):
    """List catalog entries."""
    entries = catalog_mod.catalog_list(substring)
    header = ["name", "parameters", "quantized", "note"]
    rows = []
    envelope_rows = []
    for e in entries:
        problem = catalog_mod.catalog_get(e.name)
        schema = ", ".join(
            f"{s.name}={format_rational(s.default)}" for s in e.parameters
        )
        rows.append([e.name, schema or "-", problem.parameter, e.provenance])
        envelope_rows.append(
            {
                "name": e.name,
                "parameters": [
                    {
                        "name": s.name,
                        "default": format_rational(s.default),
                        "constraint": s.constraint_text,
                    }
                    for s in e.parameters
                ],
                "quantized": problem.parameter,
                "note": e.provenance,
            }
        )
    _emit(fmt, header, rows, {"entries": envelope_rows})


@main.command("solve")
@click.argument("name_or_file")
@_PARAM
@click.option("--n", "n_max", type=int, default=0, help="highest mode index")
@_FORMAT
def cmd_solve(name_or_file, params, n_max, fmt):
    """Closed-form spectrum via the quantization-constant formula."""
    try:
        name, problem = _load_problem(name_or_file, _parse_params(params))
    except _INPUT_ERRORS as exc:
        _fail(2, str(exc))
    try:
        values = [hg.eigenvalue(problem, n) for n in range(n_max + 1)]
    except DegenerateParameterMap as exc:
        _fail(1, str(exc))
    header = ["n", "eigenvalue"]
    rows = [[str(n), format_rational(v)] for n, v in enumerate(values)]
    _emit(
        fmt,
        header,
        rows,
        {
            "name": name,
            "parameter": problem.parameter,
            "rows": [
                {"n": n, "eigenvalue": format_rational(v)} for n, v in enumerate(values)
            ],
        },
    )


@main.command("aim")
@click.argument("name_or_file")
@_PARAM
@click.option("--r0", default=None, help="evaluation point (rational)")
@click.option("--bracket", required=True, help="lo:hi search bracket (rationals)")
@click.option("--kmax", type=int, default=40)
@click.option("--tol", default="1/100000000")
@click.option("--scan", "scan_points", type=int, default=64)
@_FORMAT
def cmd_aim(name_or_file, params, r0, bracket, kmax, tol, scan_points, fmt):
    """Iterative spectrum via exact-sign bisection on the quantization determinant."""
    try:
        name, problem = _load_problem(name_or_file, _parse_params(params))
        lo, hi = _parse_bracket(bracket)
        r0_val = parse_rational(r0) if r0 is not None else problem.eval_point
        tol_val = parse_rational(tol)
    except _INPUT_ERRORS as exc:
        _fail(2, str(exc))
    try:
        estimates = aim_mod.solve_iterative(
            hg.to_aim_form(problem), r0_val, (lo, hi), kmax, tol_val, scan_points
        )
    except _RUNTIME_ERRORS as exc:
        _fail(1, str(exc))
    header = ["n", "value", "k_used", "converged"]
    rows = [
        [str(e.n), format_rational(e.value), str(e.k_used), str(e.converged).lower()]
        for e in estimates
    ]
    _emit(
        fmt,
        header,
        rows,
        {
            "name": name,
            "rows": [
                {
                    "n": e.n,
                    "value": format_rational(e.value),
                    "k_used": e.k_used,
                    "converged": e.converged,
                    "history": [[k, format_rational(v)] for k, v in e.history],
                }
                for e in estimates
            ],
        },
    )
    if fmt == "table":
        for e in estimates:
            trail = ", ".join(f"k={k}: {format_rational(v)}" for k, v in e.history)
            click.echo(f"  history[n={e.n}]: {trail}")
    if not all(e.converged for e in estimates):
        sys.exit(1)


def _sample_grid(spec: str, count_hint: int | None = None):
    parts = spec.split(":")
    if len(parts) != 3:
        raise BadParameter(f"expected a:b:count, got {spec!r}")
    a, b = (Fraction(p) for p in parts[:2])  # decimal literals allowed for grid bounds
    count = int(parts[2])
    if count < 2:
        raise BadParameter("sample count must be >= 2")
    return [a + (b - a) * Fraction(i, count - 1) for i in range(count)]


def _decimal12(x: Fraction) -> str:
    return f"{x.numerator / x.denominator:.12g}"


@main.command("eigenfunction")
@click.argument("name_or_file")
@_PARAM
@click.option("--n", "n", type=int, default=0)
@click.option(
    "--method",
    type=click.Choice(["recursion", "rodrigues", "explicit", "hypergeometric"]),
    default="recursion",
)
@click.option("--samples", default=None, help="a:b:count sampling grid for plotting")
@_FORMAT
def cmd_eigenfunction(name_or_file, params, n, method, samples, fmt):
    """Polynomial eigenfunction coefficients, optionally sampled on a grid."""
    try:
        parsed = _parse_params(params)
        name, problem = _load_problem(name_or_file, parsed)
        if method == "explicit" and n > 3:
            raise OutOfRange("explicit closed forms exist for n <= 3 only")
        if method == "hypergeometric" and name != "hulthen":
            raise BadParameter("hypergeometric route applies to the hulthen entry only")
        grid = _sample_grid(samples) if samples else None
    except _INPUT_ERRORS as exc:
        _fail(2, str(exc))
    try:
        value = hg.eigenvalue(problem, n)
        tau = problem.tau.substitute(value)
        if method == "recursion":
            poly = eig_mod.polynomial_solution(tau, problem.sigma, n).poly
        elif method == "rodrigues":
            poly = eig_mod.rodrigues(tau, problem.sigma, n)
        elif method == "explicit":
            poly = eig_mod.y_low_order(tau, problem.sigma, n)
        else:
            q = parsed.get("q", Fraction(1))
            poly = eig_mod.hulthen_eigenfunction(n, q, value)
    except _RUNTIME_ERRORS as exc:
        _fail(1, str(exc))
    coeffs = [format_rational(c) for c in poly.coeffs] or ["0"]
    envelope = {
        "name": name,
        "n": n,
        "method": method,
        "eigenvalue": format_rational(value),
        "coefficients": coeffs,
    }
    if grid is not None:
        pairs = [(x, poly.evaluate(x)) for x in grid]
        envelope["samples"] = [[_decimal12(x), _decimal12(y)] for x, y in pairs]
        header = ["r", "y"]
        rows = [[_decimal12(x), _decimal12(y)] for x, y in pairs]
    else:
        header = ["power", "coefficient"]
        rows = [[str(i), c] for i, c in enumerate(coeffs)]
    _emit(fmt, header, rows, envelope)


@main.command("nu")
@click.argument("problem_file")
@click.option("--n", "n", type=int, default=None, help="also report the mode eigenparameter")
@_FORMAT
def cmd_nu(problem_file, n, fmt):
    """Enumerate (k, pi) reductions of a Nikiforov-Uvarov problem file."""
    try:
        with open(problem_file, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        problem = nu_mod.NuProblem(
            Poly([parse_rational(c) for c in doc["tauTilde"]]),
            Poly([parse_rational(c) for c in doc["sigma"]]),
            Poly([parse_rational(c) for c in doc["sigmaTilde"]]),
        )
    except _INPUT_ERRORS as exc:
        _fail(2, str(exc))
    try:
        candidates = nu_mod.nu_find_k(problem)
    except _RUNTIME_ERRORS as exc:
        _fail(1, str(exc))
    header = ["k", "pi", "lambdaBar", "tau", "phi"]
    if n is not None:
        header.append(f"lambdaBar_{n}")
    rows = []
    envelope_rows = []
    for c in candidates:
        row = [
            format_rational(c.k),
            str(c.pi),
            format_rational(c.lambda_bar),
            str(c.tau),
            str(c.phi) if c.phi is not None else "unsupported",
        ]
        entry = {
            "k": format_rational(c.k),
            "pi": [format_rational(x) for x in c.pi.coeffs],
            "lambdaBar": format_rational(c.lambda_bar),
            "tau": [format_rational(x) for x in c.tau.coeffs],
            "phi": str(c.phi) if c.phi is not None else None,
        }
        if n is not None:
            lam_n = nu_mod.nu_lambda_n(c.tau, problem.sigma, n)
            row.append(format_rational(lam_n))
            entry[f"lambdaBar_{n}"] = format_rational(lam_n)
        rows.append(row)
        envelope_rows.append(entry)
    _emit(fmt, header, rows, {"candidates": envelope_rows})


@main.command("verify")
@click.option("--filter", "substring", default=None)
def cmd_verify(substring):
    """Run the self-verification suites; exit 0 only if everything passes."""
    results = verify_mod.run_suites(substring)
    if not results:
        _fail(2, f"no suite matches filter {substring!r}")
    width = max(len(f"[{r.suite}] {r.name}") for r in results)
    for r in results:
        label = f"[{r.suite}] {r.name}"
        status = "PASS" if r.ok else "FAIL"
        suffix = f"  ({r.detail})" if r.detail and not r.ok else ""
        click.echo(f"{label.ljust(width)}  {status}{suffix}")
    failed = sum(1 for r in results if not r.ok)
    click.echo(f"{len(results) - failed}/{len(results)} checks passed")
    if failed:
        sys.exit(1)


if __name__ == "__main__":  # pragma: no cover
    main()
