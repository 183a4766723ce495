"""Command-line interface: ``cecpoly {poly,verify,table,scan-unimodal}``.

Exit codes: 0 success (or every adjudicated verdict as expected), 1 verification
mismatch, 2 usage error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Sequence

from . import formulas as F
from .engine import EngineStats, cec_poly_engine
from .errors import BudgetExceeded, CecError, EdgeListParseError, InvalidParameter, ResourceLimit
from .graphs import Family, FamilySpec, Graph, generate, parse_edge_list, spec
from .oracle import OracleConfig, cec_poly_oracle, default_workers
from .poly import Poly, format_poly, is_unimodal
from .verify import emit_report, run_claims, scan_unimodality, summarize, unimodality_corpus

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

# polynomial formulas that survive verification; fan, cocktail party and the
# wheel totals do not, so `auto` never routes to them
CONFIRMED_FORMULAS = frozenset(
    {Family.PATH, Family.STAR, Family.CYCLE, Family.COMPLETE_BIPARTITE, Family.FRIENDSHIP}
)
REFUTED_FORMULAS = frozenset({Family.FAN, Family.COCKTAIL_PARTY, Family.WHEEL})


class UsageError(Exception):
    pass


_seen_notices: set[str] = set()


def _notice(msg: str, once: bool = False) -> None:
    if once:
        if msg in _seen_notices:
            return
        _seen_notices.add(msg)
    print(f"cecpoly: {msg}", file=sys.stderr)


# -- computing one target ---------------------------------------------------------


def _formula(fs: FamilySpec) -> F.FormulaResult:
    km = None
    if fs.family is Family.LOLLIPOP:
        km = cec_poly_engine(generate(spec("complete", fs.params[0])))
    res = F.formula_for(fs, km)
    if res is None:
        raise UsageError(f"no closed-form formula for {fs}")
    return res


def compute(
    target: FamilySpec | Graph,
    method: str,
    budget: OracleConfig,
    stats: EngineStats | None = None,
) -> tuple[Poly | None, int]:
    """Return ``(polynomial or None, total)`` by the requested method."""
    fs = target if isinstance(target, FamilySpec) else None
    g = generate(fs) if fs is not None else target

    if method == "auto":
        if fs is not None and fs.family in CONFIRMED_FORMULAS:
            res = F.formula_for(fs)
            if res is not None and res.poly is not None:
                return res.poly, res.poly(1)
        if fs is not None and fs.family in REFUTED_FORMULAS:
            _notice(f"stated formula for {fs.family.value} is refuted by enumeration; using the engine", once=True)
        try:
            p = cec_poly_engine(g, stats=stats)
        except ResourceLimit:
            if g.m > budget.max_edges:
                raise
            _notice("engine hit its resource limit; falling back to the oracle")
            p = cec_poly_oracle(g, budget)
        return p, p(1)
    if method == "oracle":
        p = cec_poly_oracle(g, budget)
        return p, p(1)
    if method == "engine":
        p = cec_poly_engine(g, stats=stats)
        return p, p(1)
    if method == "formula":
        if fs is None:
            raise UsageError("--method formula needs a family target, not a file")
        if fs.family in REFUTED_FORMULAS:
            _notice(f"stated formula for {fs.family.value} is refuted by enumeration; printing it as stated", once=True)
        res = _formula(fs)
        total = res.total if res.total is not None else res.poly(1)
        return res.poly, total
    raise UsageError(f"unknown method {method!r}")


def _render_poly(label: str, p: Poly | None, total: int, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "graph": label,
            "coefficients": [str(c) for c in p.coeffs] if p is not None else None,
            "min_exp": p.min_exp if p is not None else None,
            "degree": p.degree if p is not None else None,
            "total": str(total),
            "unimodal": is_unimodal(p) if p is not None else None,
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        if p is None:
            raise UsageError("csv output needs a polynomial; this method only gives a total")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "coefficient"])
        for i, c in enumerate(p.coeffs):
            w.writerow([i, c])
        return buf.getvalue()
    if p is None:
        return f"total {total}\n"
    uni = "yes" if is_unimodal(p) else "no"
    lo = "-" if p.min_exp is None else p.min_exp
    hi = "-" if p.degree is None else p.degree
    return f"{format_poly(p)} ; total {total}\nmin_exp {lo} ; degree {hi} ; unimodal {uni}\n"


# -- argument helpers ---------------------------------------------------------------------


def _family_spec(family: str, params: Sequence[str]) -> FamilySpec:
    try:
        fam = Family(family)
    except ValueError:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(f.value for f in Family)}") from None
    try:
        values = [int(p) for p in params]
    except ValueError:
        raise UsageError(f"parameters must be integers, got {' '.join(params)}") from None
    return FamilySpec(fam, tuple(values))


_TUPLE = re.compile(r"^\(?\s*(\d+(?:\s*,\s*\d+)*)\s*\)?$")


def _parse_point(text: str) -> tuple[int, ...]:
    m = _TUPLE.match(text.strip())
    if not m:
        raise UsageError(f"bad range endpoint {text!r}")
    return tuple(int(t) for t in m.group(1).split(","))


def parse_range(text: str, family: Family) -> list[tuple[int, ...]]:
    """``2..6`` for one-parameter families; ``(3,2)..(5,4)`` walks pairs in lexicographic order."""
    if ".." not in text:
        return [_parse_point(text)]
    lo_s, hi_s = text.split("..", 1)
    lo, hi = _parse_point(lo_s), _parse_point(hi_s)
    if len(lo) != len(hi):
        raise UsageError(f"range endpoints differ in arity: {text!r}")
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    if len(lo) == 1:
        return [(v,) for v in range(lo[0], hi[0] + 1)]
    if len(lo) != 2:
        raise UsageError("ranges support one or two parameters")
    out = []
    for a in range(lo[0], hi[0] + 1):
        for b in range(1, a + 1 if family is Family.TURAN else hi[1] + 1):
            if lo <= (a, b) <= hi:
                try:
                    FamilySpec(family, (a, b))
                except InvalidParameter:
                    continue
                out.append((a, b))
    return out


def _budget(args) -> OracleConfig:
    try:
        return OracleConfig(max_edges=args.max_oracle_edges, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- subcommands ------------------------------------------------------------------------------


def cmd_poly(args) -> int:
    if args.file:
        if args.target:
            raise UsageError("give either a family target or --file, not both")
        try:
            with open(args.file, encoding="utf-8") as fh:
                target: FamilySpec | Graph = parse_edge_list(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
        label = args.file
    else:
        if not args.target:
            raise UsageError("missing target: FAMILY PARAMS... or --file PATH")
        target = _family_spec(args.target[0], args.target[1:])
        label = str(target)
    stats = EngineStats() if args.stats else None
    p, total = compute(target, args.method, _budget(args), stats)
    sys.stdout.write(_render_poly(label, p, total, args.format))
    if stats is not None:
        _notice("engine memo: " + json.dumps(stats.as_dict()))
    return EXIT_OK


def cmd_verify(args) -> int:
    ids = None
    if args.claims:
        ids = [c for chunk in args.claims for c in chunk.split(",") if c]
    try:
        reports = run_claims(ids, _budget(args), prefer_engine=args.engine_only)
    except KeyError as exc:
        raise UsageError(f"unknown claim id(s): {exc.args[0]}") from None
    sys.stdout.write(emit_report(reports, args.format, timings=args.timings))
    summary = summarize(reports)
    return EXIT_OK if not summary["unexpected"] else EXIT_MISMATCH


def cmd_table(args) -> int:
    try:
        fam = Family(args.family)
    except ValueError:
        raise UsageError(f"unknown family {args.family!r}") from None
    points = parse_range(args.range, fam)
    if not points:
        raise UsageError(f"range {args.range!r} selects no valid parameters")
    budget = _budget(args)
    rows = []
    for params in points:
        fs = FamilySpec(fam, params)
        p, total = compute(fs, args.method, budget)
        rows.append((fs, p, total))
    if args.format == "json":
        doc = [
            {
                "params": list(fs.params),
                "coefficients": None if args.totals_only or p is None else [str(c) for c in p.coeffs],
                "total": str(total),
            }
            for fs, p, total in rows
        ]
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["params", "polynomial", "total"])
        for fs, p, total in rows:
            poly_text = "" if args.totals_only or p is None else format_poly(p)
            w.writerow([" ".join(map(str, fs.params)), poly_text, total])
        sys.stdout.write(buf.getvalue())
    else:
        for fs, p, total in rows:
            key = ",".join(map(str, fs.params))
            if args.totals_only or p is None:
                print(f"{key}\t{total}")
            else:
                print(f"{key}\t{format_poly(p)}\t{total}")
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.family:
        try:
            fam = Family(args.family)
        except ValueError:
            raise UsageError(f"unknown family {args.family!r}") from None
        lo = {Family.CYCLE: 3, Family.WHEEL: 4, Family.FAN: 2, Family.PATH: 2}.get(fam, 1)
        if fam in (Family.LOLLIPOP, Family.TURAN, Family.COMPLETE_BIPARTITE, Family.COMPLETE_MULTIPARTITE):
            raise UsageError("--family scans support one-parameter families")
        specs = [FamilySpec(fam, (n,)) for n in range(lo, args.max + 1)]
    else:
        specs = unimodality_corpus()
    report = scan_unimodality(specs, _budget(args))
    if args.format == "json":
        sys.stdout.write(json.dumps(report.to_json(), indent=2) + "\n")
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK


# -- parser --------------------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, formats: Sequence[str] = ("text", "json", "csv")) -> None:
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--workers", type=int, default=default_workers(), help="oracle threads (env CECPOLY_WORKERS)")
    p.add_argument("--max-oracle-edges", type=int, default=26, help="edge budget for exhaustive enumeration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cecpoly", description="Connected edge cover polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="compute E_c(G, x) for a family member or an edge-list file")
    p.add_argument("target", nargs="*", help="FAMILY PARAM... e.g. 'cycle 5' or 'turan 5 3'")
    p.add_argument("--file", help="edge-list file instead of a family")
    p.add_argument("--method", choices=("oracle", "engine", "formula", "auto"), default="auto")
    p.add_argument("--stats", action="store_true", help="print engine memo statistics to stderr")
    _common(p)
    p.set_defaults(func=cmd_poly)

    v = sub.add_parser("verify", help="adjudicate the registered claims")
    v.add_argument("--claims", action="append", help="comma-separated claim ids (default: all)")
    v.add_argument("--timings", action="store_true", help="include runtime_ms (makes output nondeterministic)")
    v.add_argument("--engine-only", action="store_true", help="use the engine even where the oracle fits")
    _common(v, ("text", "json"))
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="one row per parameter: polynomial and total")
    t.add_argument("family")
    t.add_argument("range", help="'2..6' or '(3,2)..(5,4)'")
    t.add_argument("--method", choices=("oracle", "engine", "formula", "auto"), default="auto")
    t.add_argument("--totals-only", action="store_true")
    _common(t)
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("scan-unimodal", help="look for non-unimodal coefficient sequences")
    s.add_argument("--family", help="scan one family instead of the default corpus")
    s.add_argument("--max", type=int, default=12, help="largest parameter for --family")
    _common(s, ("text", "json"))
    s.set_defaults(func=cmd_scan)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _seen_notices.clear()
    try:
        return args.func(args)
    except (UsageError, InvalidParameter, EdgeListParseError) as exc:
        _notice(f"error: {exc}")
        return EXIT_USAGE
    except (ResourceLimit, BudgetExceeded) as exc:
        _notice(f"resource limit: {exc}")
        return EXIT_RESOURCE
    except CecError as exc:  # pragma: no cover
        _notice(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
