"""Command-line front end.

Usage::

    fixedlocus verify [--roots 1,2,3,4] [--degree 8] [--mutate NAME]
    fixedlocus table
    fixedlocus invariants [--trace T]
    fixedlocus catalog [--family NAME]

Every subcommand takes ``--format {text,csv,json}``.  Exit status is 0 on
success, 1 when a verification fails and 2 for usage or validation errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import catalog, fourfold, identity
from .errors import FixedLocusError, TraceParityError, TraceRangeError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _plain(value):
    """Make a value JSON/CSV friendly; rationals become ``p/q`` strings."""
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else _cell(v) for v in row])
    return buf.getvalue()


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _json(command: str, parameters: dict, results) -> str:
    doc = {"command": command, "parameters": _plain(parameters), "results": _plain(results)}
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


# -- verify ------------------------------------------------------------------


def _roots(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma list of integers: {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("root counts must be positive integers")
    return sorted(set(values))


def _degree(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if d < 0:
        raise argparse.ArgumentTypeError("degree must be non-negative")
    return d


def run_verify(roots: list[int], degree: int, mutate: str | None = None) -> list[identity.VerificationReport]:
    kw = identity.MUTATIONS[mutate] if mutate else {}
    reports = [identity.verify_per_root(degree, **kw)]
    reports += [identity.verify_product(m, degree, **kw) for m in roots]
    reports += [identity.verify_top_degree(m, **kw) for m in roots]
    return reports


def _report_dict(r: identity.VerificationReport) -> dict:
    d = r.first_discrepancy
    return {
        "check": r.check_name,
        "num_roots": r.num_roots,
        "trunc_degree": r.trunc_degree,
        "passed": r.passed,
        "discrepancy": None
        if d is None
        else {"degree": d.degree, "monomial": d.monomial_str, "lhs": d.lhs, "rhs": d.rhs},
    }


def cmd_verify(args) -> tuple[str, int]:
    reports = run_verify(args.roots, args.degree, args.mutate)
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED
    params = {"roots": args.roots, "degree": args.degree, "mutate": args.mutate}
    if args.format == "json":
        return _json("verify", params, [_report_dict(r) for r in reports]), status
    if args.format == "csv":
        rows = []
        for r in reports:
            d = r.first_discrepancy
            rows.append(
                [r.check_name, r.num_roots, r.trunc_degree, r.passed]
                + ([None] * 4 if d is None else [d.degree, d.monomial_str, d.lhs, d.rhs])
            )
        header = ["check", "num_roots", "trunc_degree", "passed",
                  "degree", "monomial", "lhs", "rhs"]
        return _csv(header, rows), status
    lines = []
    for r in reports:
        line = f"{r.check_name:<11} m={r.num_roots} d={r.trunc_degree}  {'ok' if r.passed else 'FAILED'}"
        d = r.first_discrepancy
        if d is not None:
            line += f"  at degree {d.degree}, {d.monomial_str}: {d.lhs} != {d.rhs}"
        lines.append(line)
    lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n", status


# -- table -------------------------------------------------------------------


def cmd_table(args) -> tuple[str, int]:
    rows = fourfold.corollary_rows()
    if args.format == "json":
        results = [{"k2": r.k2, "chi": r.chi, "traces": list(r.traces)} for r in rows]
        return _json("table", {}, results), EXIT_OK
    if args.format == "csv":
        data = [[r.k2, r.chi, ";".join(map(str, r.traces))] for r in rows]
        return _csv(["k2", "chi", "traces"], data), EXIT_OK
    lines = [f"{'K^2':>5} {'chi':>4}  t"]
    lines += [f"{r.k2:>5} {r.chi:>4}  {', '.join(map(str, r.traces))}" for r in rows]
    return "\n".join(lines) + "\n", EXIT_OK


# -- invariants --------------------------------------------------------------

INVARIANT_COLUMNS = ["t", "k2", "chi", "euler", "signature", "moduli_dim"]


def cmd_invariants(args) -> tuple[str, int]:
    traces = [args.trace] if args.trace is not None else list(fourfold.admissible_traces())
    records = [fourfold.invariants_from_trace(t).as_row() for t in traces]
    if args.format == "json":
        return _json("invariants", {"trace": args.trace}, records), EXIT_OK
    if args.format == "csv":
        return _csv(INVARIANT_COLUMNS, [[r[c] for c in INVARIANT_COLUMNS] for r in records]), EXIT_OK
    lines = [
        f"t={r['t']}: K^2={r['k2']} chi={r['chi']} e={r['euler']} "
        f"sign={r['signature']} A-hat={r['ahat']} moduli={r['moduli_dim']}"
        for r in records
    ]
    return "\n".join(lines) + "\n", EXIT_OK


# -- catalog -----------------------------------------------------------------


def _entry_dict(e: catalog.CatalogEntry) -> dict:
    return {
        "family": e.family.value,
        "parameters": dict(e.parameters),
        "t": e.t,
        "invariants": e.invariants.as_row(),
        "components": [{"label": c.label, "k2": c.k2, "chi": c.chi} for c in e.components],
    }


def cmd_catalog(args) -> tuple[str, int]:
    if args.family:
        entries = catalog.family_entries(args.family)
        coverage = None
    else:
        entries = catalog.all_entries()
        coverage = catalog.trace_coverage()
    if args.format == "json":
        results = {"entries": [_entry_dict(e) for e in entries]}
        if coverage is not None:
            results["coverage"] = {
                "complete": coverage.complete,
                "realized": list(coverage.realized),
                "missing": list(coverage.missing),
                "surplus": list(coverage.surplus),
            }
        return _json("catalog", {"family": args.family}, results), EXIT_OK
    if args.format == "csv":
        header = ["family", "parameters", "t", "k2", "chi", "euler", "moduli_dim", "components"]
        rows = []
        for e in entries:
            s = e.invariants.surface
            params = ";".join(f"{k}={v}" for k, v in e.parameters.items())
            comps = ";".join(
                c.label if c.k2 is None else f"{c.label}:{c.k2}:{c.chi}" for c in e.components
            )
            rows.append([e.family.value, params, e.t, s.k2, s.chi, s.euler,
                         e.invariants.moduli_dim, comps])
        return _csv(header, rows), EXIT_OK
    lines = []
    for e in entries:
        s = e.invariants.surface
        params = ", ".join(f"{k}={v}" for k, v in e.parameters.items())
        line = f"{e.family.value}({params}): t={e.t} K^2={s.k2} chi={s.chi} moduli={e.invariants.moduli_dim}"
        known = [c for c in e.components if c.k2 is not None]
        if known:
            line += "  [" + ", ".join(f"{c.label}: K^2={c.k2} chi={c.chi}" for c in known) + "]"
        lines.append(line)
    if coverage is not None:
        lines.append(
            "coverage: complete" if coverage.complete
            else f"coverage: missing {list(coverage.missing)} surplus {list(coverage.surplus)}"
        )
    return "\n".join(lines) + "\n", EXIT_OK


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "csv", "json"], default="text")

    parser = argparse.ArgumentParser(
        prog="fixedlocus",
        description="Characteristic-class checks and fixed-surface invariants "
        "of antisymplectic involutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[fmt], help="verify the Todd / A-hat series identities")
    p.add_argument("--roots", type=_roots, default=[1, 2, 3, 4])
    p.add_argument("--degree", type=_degree, default=8)
    p.add_argument("--mutate", choices=sorted(identity.MUTATIONS), default=None,
                   help="perturb the right-hand side (the checks should then fail)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[fmt], help="the 11 possible (K^2, chi) pairs")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("invariants", parents=[fmt], help="fixed-surface invariants for a trace t")
    p.add_argument("--trace", type=int, default=None)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("catalog", parents=[fmt], help="known constructions and their traces")
    p.add_argument("--family", choices=[f.value for f in catalog.Family], default=None)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, status = args.func(args)
    except FixedLocusError as exc:
        if isinstance(exc, TraceParityError):
            kind = "parity"
        elif isinstance(exc, TraceRangeError):
            kind = "range"
        else:
            kind = "validation"
        print(f"fixedlocus: {kind} error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
