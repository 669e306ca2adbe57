"""Command-line front end: ``schubertq <command> [options]``.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
JSON output is an envelope ``{command, space, n, payload, tool_version}``;
exact integers are serialized as strings, spectral values as doubles rounded
to 12 significant digits, complex numbers as ``[re, im]``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from . import __version__
from .combinatorics import BoundError, ShapeError, check_strict, enumerate_basis
from .glbc import glbc_table
from .qh import c1_matrix, format_product, operator_matrix, pieri
from .spectral import (
    IterationError,
    c1_spectrum,
    eigenbasis,
    property_o_check,
    rietsch_check,
    verify_eigenpairs,
)

THREADS_ENV = "SCHUBERTQ_THREADS"
PERRON_TOL = 1e-7


class UsageError(Exception):
    pass


def fmt_float(x: float) -> float:
    return float(f"{x:.12g}")


def fmt_complex(z: complex) -> list[float]:
    # rounding noise below 1e-12 of the magnitude is reported as zero
    re, im = z.real, z.imag
    mag = max(abs(z), 1.0)
    re = 0.0 if abs(re) < 1e-12 * mag else re
    im = 0.0 if abs(im) < 1e-12 * mag else im
    return [fmt_float(re) + 0.0, fmt_float(im) + 0.0]


def partition_str(lam) -> str:
    return ",".join(map(str, lam))


def partition_label(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")" if lam else "()"


def parse_partition(text: str, n: int):
    text = text.strip()
    try:
        parts = [int(p) for p in text.split(",")] if text else []
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}") from None
    try:
        return check_strict(parts, n)
    except ShapeError as exc:
        raise UsageError(str(exc)) from None


def envelope(command: str, space: str | None, n: int, payload: dict) -> dict:
    return {
        "command": command,
        "space": space,
        "n": n,
        "payload": payload,
        "tool_version": __version__,
    }


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True)


def render_table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def emit(fmt: str, env: dict, header: list[str], rows: list[list], text: str | None = None) -> str:
    if fmt == "json":
        return dump_json(env)
    if fmt == "csv":
        return render_csv(header, rows)
    return text if text is not None else render_table(header, rows)


def _check_n(n: int, lo: int, hi: int, name: str = "n") -> None:
    if n is None or not lo <= n <= hi:
        raise UsageError(f"--{name} must lie in {lo}..{hi}, got {n}")


def cmd_basis(args) -> tuple[str, int]:
    _check_n(args.n, 1, 16)
    basis = enumerate_basis(args.n)
    payload = {"dim": str(len(basis)), "basis": [partition_str(lam) for lam in basis]}
    rows = [[i, partition_label(lam), sum(lam)] for i, lam in enumerate(basis)]
    env = envelope("basis", args.space, args.n, payload)
    return emit(args.format, env, ["index", "partition", "weight"], rows), 0


def cmd_pieri(args) -> tuple[str, int]:
    _check_n(args.n, 1, 16)
    if args.k is None or not 1 <= args.k <= args.n:
        raise UsageError(f"--k must lie in 1..{args.n}, got {args.k}")
    lam = parse_partition(args.lam, args.n)
    product = pieri(args.space, args.k, lam, args.n)
    expr = format_product(args.space, product)
    terms = sorted(product.items(), key=lambda t: (t[0][1], sum(t[0][0]), t[0][0]))
    payload = {
        "k": str(args.k),
        "lambda": partition_str(lam),
        "expression": expr,
        "terms": [
            {"partition": partition_str(mu), "q_degree": str(d), "coeff": str(c)}
            for (mu, d), c in terms
        ],
    }
    rows = [[partition_label(mu), d, c] for (mu, d), c in terms]
    env = envelope("pieri", args.space, args.n, payload)
    return emit(args.format, env, ["partition", "q_degree", "coeff"], rows, text=expr), 0


def cmd_matrix(args) -> tuple[str, int]:
    _check_n(args.n, 1, 10)
    if args.k is None:
        M, label = c1_matrix(args.space, args.n), "c1"
    else:
        if not 1 <= args.k <= args.n:
            raise UsageError(f"--k must lie in 1..{args.n}, got {args.k}")
        M, label = operator_matrix(args.space, args.n, args.k), f"special_{args.k}"
    basis = [partition_str(lam) for lam in M.basis]
    entries = [[str(int(v)) for v in row] for row in M.entries]
    payload = {"operator": label, "basis": basis, "entries": entries}
    header = ["row"] + [partition_label(lam) for lam in M.basis]
    rows = [[partition_label(lam)] + row for lam, row in zip(M.basis, entries)]
    env = envelope("matrix", args.space, args.n, payload)
    return emit(args.format, env, header, rows), 0


def parse_matrix_json(text: str) -> np.ndarray:
    """Inverse of ``matrix --format json``: exact integer entries."""
    data = json.loads(text)
    return np.array([[int(v) for v in row] for row in data["payload"]["entries"]], dtype=np.int64)


def _sorted_values(values):
    return sorted(values, key=lambda z: (-round(abs(z), 9), round(math.atan2(z.imag, z.real), 9)))


def cmd_spectrum(args) -> tuple[str, int]:
    _check_n(args.n, 1, 12)
    spec = c1_spectrum(args.space, args.n)
    residual = None
    status = 0
    if args.n <= 8:
        pairs = eigenbasis(args.space, args.n)
        try:
            residual = verify_eigenpairs(args.space, args.n, tol=math.inf, pairs=pairs)
        except AssertionError:  # pragma: no cover - tol=inf never trips
            residual = math.inf
        if residual > args.tol:
            status = 1
    values = _sorted_values(spec.values)
    payload = {
        "delta0": fmt_float(spec.delta0),
        "max_residual": None if residual is None else fmt_float(residual),
        "tol": args.tol,
        "values": [fmt_complex(z) for z in values],
    }
    rows = [[i, *fmt_complex(z), fmt_float(abs(z))] for i, z in enumerate(values)]
    env = envelope("spectrum", args.space, args.n, payload)
    text = render_table(["i", "re", "im", "abs"], rows)
    text += f"\ndelta0 = {fmt_float(spec.delta0)}"
    text += f"\nmax eigen-residual = {'skipped (n > 8)' if residual is None else f'{residual:.3e}'}"
    return emit(args.format, env, ["i", "re", "im", "abs"], rows, text=text), status


def cmd_glbc(args) -> tuple[str, int]:
    _check_n(args.n_max, 1, 12, "n-max")
    reports = glbc_table(args.space, args.n_max)
    status = 0
    rows = []
    for r in reports:
        mismatch = r.delta0_numeric is not None and abs(r.delta0_numeric - r.delta0_closed) > PERRON_TOL
        if r.verdict == "fail" or mismatch:
            status = 1
        rows.append([
            r.n,
            r.dim,
            r.bound,
            fmt_float(r.delta0_closed),
            "" if r.delta0_numeric is None else fmt_float(r.delta0_numeric),
            r.verdict,
            "" if r.lemma_margin is None else fmt_float(r.lemma_margin),
        ])
    payload = {
        "rows": [
            {
                "n": str(r.n),
                "dim": str(r.dim),
                "bound": str(r.bound),
                "delta0_closed": fmt_float(r.delta0_closed),
                "delta0_numeric": None if r.delta0_numeric is None else fmt_float(r.delta0_numeric),
                "verdict": r.verdict,
                "lemma_margin": None if r.lemma_margin is None else fmt_float(r.lemma_margin),
            }
            for r in reports
        ]
    }
    header = ["n", "dim", "bound", "delta0", "delta0_numeric", "verdict", "lemma_margin"]
    env = envelope("glbc", args.space, args.n_max, payload)
    return emit(args.format, env, header, rows), status


def cmd_property_o(args) -> tuple[str, int]:
    _check_n(args.n, 1, 8)
    rep = property_o_check(args.space, args.n, tol=args.tol)
    items = [
        ("delta0 is an eigenvalue", rep.is_eigenvalue),
        ("delta0 is simple", rep.simple),
        (f"modulus-delta0 eigenvalues are delta0 * {rep.fano_index}-th roots of unity", rep.roots_of_unity),
    ]
    payload = {
        "delta0": fmt_float(rep.delta0),
        "fano_index": str(rep.fano_index),
        "items": {"eigenvalue": rep.is_eigenvalue, "simple": rep.simple, "roots_of_unity": rep.roots_of_unity},
        "passed": rep.passed,
        "top_values": [fmt_complex(z) for z in _sorted_values(rep.top_values)],
    }
    rows = [[i + 1, name, "pass" if ok else "FAIL"] for i, (name, ok) in enumerate(items)]
    env = envelope("property-o", args.space, args.n, payload)
    return emit(args.format, env, ["item", "condition", "result"], rows), 0 if rep.passed else 1


def cmd_rietsch(args) -> tuple[str, int]:
    _check_n(args.n, 1, 12)
    expected = 1.0 / math.sin(math.pi / (2 * args.n))
    try:
        I0, value = rietsch_check(args.n)
    except AssertionError as exc:
        print(str(exc), file=sys.stderr)
        return "", 1
    payload = {
        "I0": [str(j) for j in I0.entries],
        "value": fmt_complex(value),
        "expected": fmt_float(expected),
    }
    rows = [[str(I0), fmt_float(value.real), fmt_float(expected)]]
    env = envelope("rietsch", args.space, args.n, payload)
    return emit(args.format, env, ["I0", "E1", "1/sin(pi/2n)"], rows), 0


COMMANDS = {
    "basis": cmd_basis,
    "pieri": cmd_pieri,
    "matrix": cmd_matrix,
    "spectrum": cmd_spectrum,
    "glbc": cmd_glbc,
    "property-o": cmd_property_o,
    "rietsch": cmd_rietsch,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schubertq", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, space=True, n=True, k=False, lam=False, n_max=False, tol=False):
        p = sub.add_parser(name, help=help_text)
        if space:
            p.add_argument("--space", choices=["lg", "og"], required=name != "basis")
        if n:
            p.add_argument("--n", type=int, required=True)
        if n_max:
            p.add_argument("--n-max", type=int, required=True)
        if k:
            p.add_argument("--k", type=int, required=name == "pieri")
        if lam:
            p.add_argument("--lambda", dest="lam", default="", help="comma-separated parts; empty for the unit")
        if tol:
            p.add_argument("--tol", type=float, default=1e-8)
        p.add_argument("--format", choices=["json", "csv", "table"], default="table")
        return p

    add("basis", "list the Schubert basis")
    add("pieri", "quantum Pieri product of a special class with a Schubert class", k=True, lam=True)
    add("matrix", "exact integer matrix of [c1] (or of a special class with --k)", k=True)
    add("spectrum", "closed-form [c1] spectrum with eigen-residual check", tol=True)
    add("glbc", "Galkin lower bound table for n = 1..n-max", n=False, n_max=True)
    add("property-o", "check Property O on the [c1] spectrum", tol=True)
    add("rietsch", "locate I0 and check E1(zeta^I0) = 1/sin(pi/2n)", space=False)
    return parser


def _thread_cap() -> int | None:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "space"):
        args.space = None
    try:
        _thread_cap()
        out, status = COMMANDS[args.command](args)
    except (UsageError, BoundError, ShapeError, ValueError) as exc:
        print(f"schubertq {args.command}: {exc}", file=sys.stderr)
        return 2
    except IterationError as exc:
        print(f"schubertq {args.command}: {exc} (last estimate {exc.estimate})", file=sys.stderr)
        return 1
    if out:
        print(out)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
