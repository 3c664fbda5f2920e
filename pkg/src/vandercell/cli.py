"""Command-line front end.

Every subcommand writes one structured result (JSON by default, CSV where the
result is a table) and exits with 0 on success, 1 on a negative decision and
2 on a usage error.  Relative ``--output`` paths are resolved against
``$VANDERCELL_OUTPUT_DIR`` when it is set.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from . import cell, cell2d, copositivity, gale, halfdegree, trace, verify
from .expr import parse, parse_polynomial, parse_symmetric
from .symcore import format_rational, parse_rational

OUTPUT_DIR_ENV = "VANDERCELL_OUTPUT_DIR"


@dataclass(frozen=True)
class CommandConfig:
    subcommand: str
    mode: str = "exact"
    format: Optional[str] = None
    output: Optional[str] = None
    seed: int = 0
    tol: float = 1e-9
    threads: int = 1


@dataclass
class Result:
    payload: object
    exit_code: int = 0
    table: Optional[List[list]] = None  # header row first


class UsageError(Exception):
    pass


# -- serialisation ----------------------------------------------------------------


def _num(x, mode: str = "exact"):
    if isinstance(x, bool):
        return x
    if isinstance(x, Fraction):
        if mode == "float":
            return float(x)
        return format_rational(x)
    if isinstance(x, int):
        return x if mode == "exact" else float(x)
    if isinstance(x, float):
        return x
    if isinstance(x, cell2d.Surd):
        return float(x)
    return x


def _nums(xs, mode: str = "exact") -> list:
    return [_num(x, mode) for x in xs]


def _render(result: Result, fmt: str) -> str:
    if fmt == "csv":
        if result.table is None:
            raise UsageError("this subcommand has no CSV output; use --format json")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in result.table:
            writer.writerow(row)
        return buf.getvalue()
    return json.dumps(result.payload, indent=2 if isinstance(result.payload, (dict, list)) else None) + "\n"


def _table_payload(table: List[list]) -> list:
    header, rows = table[0], table[1:]
    return [dict(zip(header, row)) for row in rows]


def _write(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    if not os.path.isabs(output) and os.environ.get(OUTPUT_DIR_ENV):
        output = os.path.join(os.environ[OUTPUT_DIR_ENV], output)
    parent = os.path.dirname(output)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(output, "w", newline="") as fh:
        fh.write(text)


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _coordinate(text: str, mode: str):
    try:
        q = parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}")
    return float(q) if mode == "float" else q


def _cell_domain(args):
    if args.limit:
        return cell2d.LIMIT
    if args.n is None:
        raise UsageError("give --n N or --limit")
    return cell2d.FiniteN(args.n)


def _domain_json(domain) -> object:
    return "limit" if isinstance(domain, (cell2d.Limit, copositivity.AllN)) else domain.n


# -- cell geometry ------------------------------------------------------------------


def cmd_boundary(args, cfg: CommandConfig) -> Result:
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    rows = [["arc_id", "t", "p2", "p3"]]
    if args.limit:
        arcs = [cell2d.Arc.lower(k) for k in range(args.k_max, 0, -1)]
    else:
        if args.n is None:
            raise UsageError("give --n N or --limit")
        arcs = cell2d.boundary_arcs(args.n)
    for arc in arcs:
        lo, hi = arc.domain()
        for i in range(args.samples + 1):
            t = lo + (hi - lo) * Fraction(i, args.samples)
            rows.append([arc.label, *_nums((t, *cell2d.arc_eval(arc, t)), cfg.mode)])
    if args.limit:
        up = cell2d.Arc.upper_limit()
        for i in range(args.samples + 1):
            u = Fraction(i, args.samples)
            rows.append([up.label, *_nums((u * u, *cell2d.arc_eval_limit_u(u)), cfg.mode)])
    return Result(_table_payload(rows), table=rows)


def cmd_area(args, cfg: CommandConfig) -> Result:
    domain = _cell_domain(args)
    mode = cell2d.AreaMode(args.method)
    value = cell2d.area(domain, mode)
    return Result(_num(value, cfg.mode))


def cmd_member(args, cfg: CommandConfig) -> Result:
    domain = _cell_domain(args)
    point = (_coordinate(args.a, cfg.mode), _coordinate(args.b, cfg.mode))
    verdict = cell2d.membership(point, domain, tol=cfg.tol)
    payload = {"point": _nums(point, cfg.mode), "domain": _domain_json(domain), "membership": verdict.value}
    return Result(payload, exit_code=1 if verdict is cell2d.Membership.OUTSIDE else 0)


def cmd_fiber(args, cfg: CommandConfig) -> Result:
    domain = _cell_domain(args)
    a = _coordinate(args.a, cfg.mode)
    low, high = cell2d.fiber_interval(a, domain)
    payload = {"a": _num(a, cfg.mode), "domain": _domain_json(domain), "low": _num(low, cfg.mode), "high": _num(high, cfg.mode)}
    return Result(payload)


def cmd_facets(args, cfg: CommandConfig) -> Result:
    facets = gale.enumerate_facets(args.n, args.d)
    if args.count:
        return Result(len(facets), table=[["count"], [len(facets)]])
    lists = [f.to_json() for f in facets]
    table = [["facet"]] + [[" ".join(str(k) for k in f)] for f in lists]
    return Result({"n": args.n, "d": args.d, "facets": lists}, table=table)


def cmd_patches(args, cfg: CommandConfig) -> Result:
    source = cell.Source(args.source)
    patches = cell.enumerate_patches(args.n, args.d, source, k_max=args.k_max)
    width = max((p.vertices.size for p in patches), default=0)
    header = ["patch_id", "vertex_set"] + [f"t{i + 1}" for i in range(width)] + [f"p{j}" for j in range(2, args.d + 1)]
    rows = [header]
    for pid, patch in enumerate(patches):
        for sample in cell.patch_sample(patch, args.resolution):
            w = _nums(sample.weights, cfg.mode) + [""] * (width - len(sample.weights))
            rows.append([pid, patch.label(), *w, *_nums(sample.point, cfg.mode)])
    payload = {
        "n": args.n,
        "d": args.d,
        "source": source.value,
        "patches": [p.vertices.to_json() for p in patches],
    }
    return Result(payload, table=rows)


# -- copositivity ---------------------------------------------------------------------


def _decision_payload(decision, positive: str, negative: str) -> dict:
    if decision.holds:
        return {"verdict": positive, "tested": decision.tested}
    return {"verdict": negative, "witness": {"k": decision.k, "value": format_rational(decision.value)}}


def cmd_copositive(args, cfg: CommandConfig) -> Result:
    try:
        values = [parse_rational(v) for v in args.hook.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--hook expects comma-separated rationals, got {args.hook!r}")
    f = copositivity.HookPolynomial.from_list(values, args.d)
    if args.all_n:
        decision, domain = copositivity.hook_copositive_all_n(f), "all"
    elif args.n is not None:
        decision, domain = copositivity.hook_copositive(f, args.n), args.n
    else:
        raise UsageError("give --n N or --all-n")
    payload = {"polynomial": f.to_symmetric().pretty(), "n": domain}
    payload.update(_decision_payload(decision, "copositive", "not_copositive"))
    return Result(payload, exit_code=0 if decision.holds else 1)


def cmd_sextic(args, cfg: CommandConfig) -> Result:
    s = copositivity.SexticCoeffs(args.a, args.b, args.c)
    if args.all_n:
        domain, label = copositivity.ALL_N, "all"
    elif args.n is not None:
        domain, label = copositivity.FiniteN(args.n), args.n
    else:
        raise UsageError("give --n N or --all-n")
    decision = copositivity.clr_sextic(s, domain)
    payload = {"polynomial": s.to_symmetric().pretty(), "n": label}
    payload.update(_decision_payload(decision, "nonnegative", "not_nonnegative"))
    return Result(payload, exit_code=0 if decision.holds else 1)


# -- half-degree and traces -------------------------------------------------------------


def _verdict_payload(v) -> dict:
    out = {"verdict": v.kind.value}
    if isinstance(v, halfdegree.Counterexample):
        out.update(
            {
                "value": format_rational(v.value),
                "s": [_nums(g) for g in v.s],
                "t": [_nums(g) for g in v.t],
                "n": list(v.realized_n),
                "point": [_nums(g) for g in v.realized_point],
            }
        )
    else:
        out.update({"min_found": v.min_found, "box_radius": v.box_radius})
    return out


def _search_config(args, cfg: CommandConfig) -> halfdegree.SearchConfig:
    if args.budget < 1:
        raise UsageError("--budget must be >= 1")
    return halfdegree.SearchConfig(
        budget=args.budget, box_radius=args.box_radius, tol=cfg.tol, seed=cfg.seed, threads=cfg.threads
    )


def cmd_halfdeg(args, cfg: CommandConfig) -> Result:
    f = parse_symmetric(args.poly)
    phi = halfdegree.build_phi(f)
    verdict = halfdegree.check_phi(phi, _search_config(args, cfg))
    payload = {"polynomial": f.pretty()}
    payload.update(_verdict_payload(verdict))
    return Result(payload, exit_code=1 if isinstance(verdict, halfdegree.Counterexample) else 0)


def cmd_trace_check(args, cfg: CommandConfig) -> Result:
    e = parse(args.expr)
    payload = {"expression": trace.describe(e), "normalized": trace.is_normalized(e)}
    if trace.is_normalized(e):
        verdict = trace.check_normalized(e, _search_config(args, cfg))
        payload.update(_verdict_payload(verdict))
        return Result(payload, exit_code=1 if isinstance(verdict, halfdegree.Counterexample) else 0)
    found = trace.counterexample_search(e, budget=args.budget, seed=cfg.seed)
    if isinstance(found, trace.Witness):
        payload.update(
            {
                "verdict": "counterexample",
                "value": format_rational(found.value),
                "spectra": {k: _nums(v) for k, v in found.spectra.items()},
            }
        )
        return Result(payload, exit_code=1)
    payload.update({"verdict": "none_found", "budget": found.budget})
    return Result(payload)


def _spectra_arg(items: Sequence[str]) -> dict:
    spectra = {}
    for item in items or ():
        name, sep, values = item.partition("=")
        if not sep or not name.strip():
            raise UsageError(f"--spectrum expects NAME=v1,v2,..., got {item!r}")
        try:
            spectra[name.strip()] = tuple(parse_rational(v) for v in values.split(","))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad eigenvalues in {item!r}")
    return spectra


def cmd_trace_eval(args, cfg: CommandConfig) -> Result:
    e = parse(args.expr)
    spectra = _spectra_arg(args.spectrum)
    missing = [v for v in trace.variables(e) if v not in spectra]
    if missing:
        raise UsageError("no spectrum given for " + ", ".join(missing))
    value = trace.eval_on_spectra(e, spectra)
    return Result({"expression": trace.describe(e), "value": _num(value, cfg.mode)})


def cmd_trace_symmetric(args, cfg: CommandConfig) -> Result:
    e = parse(args.expr)
    poly, report = trace.to_product_symmetric(e)
    payload = {
        "expression": trace.describe(e),
        "groups": list(poly.groups),
        "polynomial": poly.pretty(),
        "degrees": list(report.degrees),
        "multihomogeneous": report.multihomogeneous,
    }
    return Result(payload)


def cmd_encode(args, cfg: CommandConfig) -> Result:
    p = parse_polynomial(args.poly)
    q, M = trace.aux_polynomial(p, args.k)
    encoded = trace.tau_encode(p, args.k)
    payload = {
        "k": args.k,
        "multiplier": format_rational(M),
        "groups": list(encoded.groups),
        "terms": len(encoded.terms),
        "polynomial": encoded.pretty(),
    }
    return Result(payload)


def cmd_verify_paper(args, cfg: CommandConfig) -> Result:
    results = verify.verify_paper()
    rows = [["check", "status", "detail"]] + [[r.name, "PASS" if r.passed else "FAIL", r.detail] for r in results]
    payload = {
        "passed": all(r.passed for r in results),
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    }
    return Result(payload, exit_code=0 if payload["passed"] else 1, table=rows)


# -- parser ---------------------------------------------------------------------------------

_DEFAULT_FORMAT = {"boundary": "csv", "patches": "csv"}


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact", help="exact rationals (default)")
    mode.add_argument("--float", dest="mode", action="store_const", const="float", help="floating point output")
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.add_argument("--output", default=None, help="write to a file instead of stdout")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--threads", type=int, default=1)
    return p


def _domain_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n", type=int)
    g.add_argument("--limit", action="store_true", help="the n -> infinity cell")


def _search_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=64)
    p.add_argument("--box-radius", type=float, default=10.0)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="vandercell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("boundary", parents=[common], help="sample the boundary arcs of the planar cell")
    _domain_args(p)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--k-max", type=int, default=20, help="lower arcs drawn for --limit")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("facets", parents=[common], help="facets of the cyclic polytope")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("patches", parents=[common], help="boundary patches with sampled points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--source", choices=[s.value for s in cell.Source], default="simplex")
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--resolution", type=int, default=4)
    p.set_defaults(func=cmd_patches)

    p = sub.add_parser("area", parents=[common], help="area of the planar cell")
    _domain_args(p)
    p.add_argument("--method", choices=[m.value for m in cell2d.AreaMode], default="closed")
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("member", parents=[common], help="classify a point (p2, p3)")
    _domain_args(p)
    p.add_argument("--a", required=True, help="p2 coordinate")
    p.add_argument("--b", required=True, help="p3 coordinate")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("fiber", parents=[common], help="range of p3 over the cell at fixed p2")
    _domain_args(p)
    p.add_argument("--a", required=True)
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("copositive", parents=[common], help="hook-shaped forms in e1, ..., ed")
    p.add_argument("--hook", required=True, help="coefficients of e1^(d-j) e_j for j = 0, 1, ..., d")
    p.add_argument("--d", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n", type=int)
    g.add_argument("--all-n", action="store_true")
    p.set_defaults(func=cmd_copositive)

    p = sub.add_parser("sextic", parents=[common], help="a p2^3 + b p4 p2 + c p6")
    for name in ("a", "b", "c"):
        p.add_argument(f"--{name}", type=_rational_arg, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n", type=int)
    g.add_argument("--all-n", action="store_true")
    p.set_defaults(func=cmd_sextic)

    p = sub.add_parser("halfdeg", parents=[common], help="power mean nonnegativity for every n")
    p.add_argument("--poly", required=True, help="polynomial in p1, p2, ... or e1, e2, ...")
    _search_args(p)
    p.set_defaults(func=cmd_halfdeg)

    p = sub.add_parser("trace", help="trace polynomial tools")
    tsub = p.add_subparsers(dest="trace_command", required=True)
    q = tsub.add_parser("check", parents=[common], help="search for a witness of negativity")
    q.add_argument("expr")
    q.add_argument("--budget", type=int, default=2000)
    q.add_argument("--box-radius", type=float, default=10.0)
    q.set_defaults(func=cmd_trace_check)
    q = tsub.add_parser("eval", parents=[common], help="evaluate on given spectra")
    q.add_argument("expr")
    q.add_argument("--spectrum", action="append", help="NAME=v1,v2,... (repeatable)")
    q.set_defaults(func=cmd_trace_eval)
    q = tsub.add_parser("symmetric", parents=[common], help="rewrite in power sums per matrix")
    q.add_argument("expr")
    q.set_defaults(func=cmd_trace_symmetric)
    q = tsub.add_parser("encode", parents=[common], help="encode a polynomial as a trace polynomial")
    q.add_argument("--poly", required=True)
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(func=cmd_encode)

    p = sub.add_parser("encode", parents=[common], help="alias of 'trace encode'")
    p.add_argument("--poly", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("verify-paper", parents=[common], help="check the reference values")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = CommandConfig(
        subcommand=args.command,
        mode=args.mode or "exact",
        format=args.format or _DEFAULT_FORMAT.get(args.command, "json"),
        output=args.output,
        seed=args.seed,
        tol=args.tol,
        threads=args.threads,
    )
    try:
        result = args.func(args, cfg)
        text = _render(result, cfg.format)
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"vandercell {args.command}: error: {exc}", file=sys.stderr)
        return 2
    _write(text, cfg.output)
    return result.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
