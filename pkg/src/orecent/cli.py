"""Command line front-end.

Exit codes: 0 success, 1 usage error, 2 computation error,
3 verification failure, 4 solver instability.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import arith
from .centralizer import (
    admissible_degrees,
    centralizer_space,
    classify_set,
    criteria_verdicts,
    generators_from_basis,
)
from .field import Field
from .ore import OreContext, commutator, skew_pow
from .parse import ParseError, parse_skew, parse_ypoly
from .report import Report, centralizer_results, context_to_dict
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_VERIFY, EXIT_UNSTABLE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_context(text: str) -> OreContext:
    """Build a context from JSON or ``key = value`` / ``key: value`` lines.

    Keys: ``field`` (``rationals`` or ``fp:<prime>``), ``sigma_y``, ``delta_y``.
    """
    text = text.strip()
    try:
        data = json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("context JSON must be an object")
    except json.JSONDecodeError:
        data = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            sep = "=" if "=" in line else ":"
            if sep not in line:
                raise ValueError(f"line {lineno}: expected 'key = value'")
            key, value = line.split(sep, 1)
            data[key.strip()] = value.strip().strip('"')
    unknown = set(data) - {"field", "sigma_y", "delta_y"}
    if unknown:
        raise ValueError(f"unknown context keys: {sorted(unknown)}")
    if "sigma_y" not in data:
        raise ValueError("context needs sigma_y")
    field = Field.from_name(str(data.get("field", "rationals")))
    sigma = parse_ypoly(str(data["sigma_y"]), field)
    delta = parse_ypoly(str(data.get("delta_y", "0")), field)
    return OreContext(sigma, delta, field)


def _context_from_args(args) -> OreContext:
    if args.ctx:
        return parse_context(Path(args.ctx).read_text(encoding="utf-8"))
    return OreContext(
        parse_ypoly(args.sigma, Field.from_name(args.field)),
        parse_ypoly(args.delta, Field.from_name(args.field)),
        Field.from_name(args.field),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orecent", description="Arithmetic and centralizers in K[y][x; sigma, delta].")
    parser.epilog = "Global options (anywhere on the line): --json prints the JSON report, --out FILE writes it."
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_ctx(p):
        p.add_argument("--ctx", help="context file (JSON or key = value lines)")
        p.add_argument("--field", default="rationals")
        p.add_argument("--sigma", default="y^2", help="sigma(y) (default y^2)")
        p.add_argument("--delta", default="0", help="delta(y) (default 0)")
        return p

    def with_box(p):
        p.add_argument("--max-xdeg", type=int, required=True)
        p.add_argument("--ydeg-bound", type=int, default=None)
        p.add_argument("--stability-delta", type=int, default=5)
        return p

    p = with_ctx(sub.add_parser("mul", help="product of expressions"))
    p.add_argument("exprs", nargs="+")
    p = with_ctx(sub.add_parser("pow", help="power of an expression"))
    p.add_argument("expr")
    p.add_argument("exponent", type=int)
    p = with_ctx(sub.add_parser("commutator", help="A*B - B*A"))
    p.add_argument("a")
    p.add_argument("b")
    p = with_ctx(sub.add_parser("normalize", help="canonical form of an expression"))
    p.add_argument("expr")
    p = with_box(with_ctx(sub.add_parser("centralizer", help="bounded centralizer space")))
    p.add_argument("P")
    p = with_box(with_ctx(sub.add_parser("basis", help="K[P]-module generators")))
    p.add_argument("P")
    p = with_ctx(sub.add_parser("analyze", help="criteria verdicts and admissible degrees"))
    p.add_argument("P")
    p.add_argument("--max-m", type=int, default=12)
    p = sub.add_parser("monomial-gen", help="generator y^l x^k of C(y^i x^j) for sigma(y)=y^s")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("s", type=int)
    p = with_ctx(sub.add_parser("classify", help="centralizer of a set"))
    p.add_argument("elems", nargs="+")
    p.add_argument("--max-xdeg", type=int, default=None)
    p.add_argument("--ydeg-bound", type=int, default=None)
    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", action="append", help="suite name or 'all' (repeatable)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--list", action="store_true")
    return parser


def _execute(args, report: Report) -> int:
    cmd = args.command
    if cmd == "monomial-gen":
        l, k = arith.monomial_generator(args.i, args.j, args.s)
        ctx = OreContext.from_strings(f"y^{args.s}", "0")
        report.context = context_to_dict(ctx)
        report.results = {"l": l, "k": k, "generator": str(ctx.monomial(1, l, k))}
        return EXIT_OK
    if cmd == "verify":
        if args.list:
            report.results = {"suites": {name: (fn.__doc__ or "").strip() for name, fn in SUITES.items()}}
            return EXIT_OK
        names = args.suite or ["all"]
        if "all" in names:
            names = list(SUITES)
        for name in names:
            if name not in SUITES:
                raise UsageError(f"unknown suite {name!r}; try 'verify --list'")
        results = {}
        all_ok = True
        for name in names:
            checks = run_suite(name, args.seed)
            ok = all(c.passed for c in checks)
            all_ok &= ok
            results[name] = {
                "passed": ok,
                "checks": len(checks),
                "failed": [{"name": c.name, "detail": c.detail} for c in checks if not c.passed],
            }
        report.results = {"seed": args.seed, "suites": results}
        report.flags["verified"] = all_ok
        return EXIT_OK if all_ok else EXIT_VERIFY

    try:
        ctx = _context_from_args(args)
    except ValueError as exc:
        raise UsageError(f"invalid context: {exc}") from exc
    report.context = context_to_dict(ctx)

    def parse(text):
        return parse_skew(text, ctx)

    if cmd == "mul":
        acc = ctx.one()
        for e in args.exprs:
            acc = acc * parse(e)
        report.results = {"result": str(acc)}
    elif cmd == "pow":
        if args.exponent < 0:
            raise UsageError("exponent must be nonnegative")
        report.results = {"result": str(skew_pow(parse(args.expr), args.exponent))}
    elif cmd == "commutator":
        report.results = {"result": str(commutator(parse(args.a), parse(args.b)))}
    elif cmd == "normalize":
        report.results = {"result": str(parse(args.expr))}
    elif cmd in ("centralizer", "basis"):
        P = parse(args.P)
        r = centralizer_space(P, args.max_xdeg, args.ydeg_bound, args.stability_delta)
        results = centralizer_results(r)
        if cmd == "basis":
            results = {k: results[k] for k in ("P", "max_xdeg", "ydeg_bound", "module_generators", "generator_count", "truncated_powers", "notes")}
        report.results = results
        report.flags["stable"] = r.stable
        report.flags["sound"] = r.sound
        if not r.sound:
            return EXIT_VERIFY
        if not r.stable:
            return EXIT_UNSTABLE
    elif cmd == "analyze":
        P = parse(args.P)
        report.results = {
            "P": str(P),
            "criteria": criteria_verdicts(P, args.max_m),
            "admissible_degrees": [{"m": d.m, "k": int(d.k)} for d in admissible_degrees(P, args.max_m)],
        }
    elif cmd == "classify":
        elems = [parse(e) for e in args.elems]
        c = classify_set(elems, args.max_xdeg, args.ydeg_bound)
        results = {"verdict": c.kind}
        if c.generator is not None:
            results["generator"] = str(c.generator)
        if c.report is not None:
            results["centralizer"] = centralizer_results(c.report)
            report.flags["stable"] = c.report.stable
            report.flags["sound"] = c.report.sound
        report.results = results
    return EXIT_OK


def run_command(argv: list[str]) -> tuple[int, Report]:
    report = Report(command=argv[0] if argv else "", argv=list(argv))
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        report.command = args.command
        code = _execute(args, report)
    except (UsageError, ParseError, OSError) as exc:
        report.results = {"error": str(exc)}
        code = EXIT_USAGE
    except (ValueError, ArithmeticError) as exc:
        report.results = {"error": str(exc)}
        code = EXIT_COMPUTE
    report.timing = {"seconds": round(time.perf_counter() - start, 6)}
    return code, report


def _split_output_options(argv: list[str]) -> tuple[list[str], bool, str | None]:
    rest, as_json, out = [], False, None
    it = iter(argv)
    for tok in it:
        if tok == "--json":
            as_json = True
        elif tok == "--out":
            out = next(it, None)
            if out is None:
                raise UsageError("--out needs a file name")
        elif tok.startswith("--out="):
            out = tok[len("--out="):]
        else:
            rest.append(tok)
    return rest, as_json, out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        argv, as_json, out = _split_output_options(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code, report = run_command(argv)
    print(report.to_json() if as_json else report.summary())
    if out:
        try:
            Path(out).write_text(report.to_json(), encoding="utf-8")
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return EXIT_USAGE
    return code
