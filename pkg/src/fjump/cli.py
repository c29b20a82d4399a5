"""Command-line front end.

    fjump --char 5 --vars x jumps --range 0..3 "x^1/5; x^t"

Results go to stdout (``--json`` for the machine format), diagnostics to
stderr.  Exit codes: 0 success, 1 computation diagnostic, 2 usage or parse
error.
"""

import argparse
import json
import logging
import sys

from .frobenius import frobenius_root
from .jumping import (NoJumpFound, ParametricPair, enumerate_jumps, fpt,
                      scaling_counterexample_check)
from .pairs import MixedPair
from .parse import ParseError, parse_ideal, parse_pair, parse_range
from .poly import PolynomialRing
from .testideal import ChainAscentError, ChainConfig, NonStabilizationError, tau_details
from .verify import SUITES, run_suites

log = logging.getLogger("fjump")


class UsageError(Exception):
    pass


class Diagnostic(Exception):
    pass


def _rat(t):
    return str(t)


def _global_flags(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--char", type=int, default=d(None), help="field characteristic p")
    parser.add_argument("--vars", default=d(None), help="comma-separated variable names")
    parser.add_argument("--order", choices=("grevlex", "lex"), default=d("grevlex"))
    parser.add_argument("--json", action="store_true", default=d(False))
    parser.add_argument("--seed", type=int, default=d(0))
    parser.add_argument("--e-cap", type=int, default=d(None), dest="e_cap")
    parser.add_argument("--confirm-steps", type=int, default=d(None), dest="confirm_steps")
    parser.add_argument("-v", "--verbose", action="store_true", default=d(False))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    parser = argparse.ArgumentParser(
        prog="fjump", description="Test ideals and F-jumping numbers over F_p[x_1..x_n].")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tau", parents=[common], help="test ideal of a pair")
    p.add_argument("pair")

    p = sub.add_parser("jumps", parents=[common], help="F-jumping numbers in (lo, hi]")
    p.add_argument("pair")
    p.add_argument("--range", required=True, dest="interval")
    p.add_argument("--denom-bound", type=int, default=None, dest="denom_bound")
    p.add_argument("--strict", action="store_true", help="exit 1 on any uncertified output")

    p = sub.add_parser("fpt", parents=[common], help="F-pure threshold of the moving ideal")
    p.add_argument("pair")
    p.add_argument("--denom-bound", type=int, default=None, dest="denom_bound")

    p = sub.add_parser("froot", parents=[common], help="Frobenius root I^[1/p^e]")
    p.add_argument("ideal")
    p.add_argument("--e", type=int, default=1)

    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis")
    p.add_argument("ideal")

    p = sub.add_parser("scaling-check", parents=[common],
                       help="is p^e t0 again a jump, for each jump t0 in the range")
    p.add_argument("pair")
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--range", default="0..3", dest="interval")
    p.add_argument("--denom-bound", type=int, default=None, dest="denom_bound")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", action="append", choices=SUITES + ("all",), default=None)
    return parser


def _ring(args):
    if args.char is None or args.vars is None:
        raise UsageError(f"{args.command} needs --char and --vars")
    names = [v.strip() for v in args.vars.split(",") if v.strip()]
    try:
        return PolynomialRing(args.char, names, args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _config(args):
    kw = {}
    if args.e_cap is not None:
        kw["e_cap"] = args.e_cap
    if args.confirm_steps is not None:
        kw["confirm_steps"] = args.confirm_steps
    try:
        return ChainConfig(**kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parametric(text, ring):
    pair = parse_pair(text, ring)
    if not isinstance(pair, ParametricPair):
        raise UsageError("this command needs a factor with exponent t, e.g. 'x^t'")
    return pair


def _fixed(text, ring):
    pair = parse_pair(text, ring)
    if not isinstance(pair, MixedPair):
        raise UsageError("tau needs numeric exponents only")
    return pair


def cmd_tau(args, ring, cfg):
    info = tau_details(_fixed(args.pair, ring), cfg)
    result = {"ideal": info.ideal.strings(), "depth": info.depth, "exact": info.exact}
    return result, str(info.ideal)


def _jump_rows(report):
    return [{"t": _rat(j.t), "certified": j.certified,
             "tau_before": j.tau_before.strings(), "tau_at": j.tau_at.strings()}
            for j in report.jumps]


def cmd_jumps(args, ring, cfg):
    lo, hi = parse_range(args.interval)
    report = enumerate_jumps(_parametric(args.pair, ring), lo, hi, args.denom_bound, cfg)
    result = {"interval": [_rat(lo), _rat(hi)], "denominator_bound": report.denominator_bound,
              "jumps": _jump_rows(report),
              "uncertified": [[_rat(a), _rat(b)] for a, b in report.uncertified]}
    lines = [", ".join(_rat(j.t) if j.certified else f"{j.t}?" for j in report.jumps)
             or "no jumps"]
    lines += [f"uncertified bracket ({a}, {b}]" for a, b in report.uncertified]
    if args.strict and not report.fully_certified():
        raise Diagnostic("\n".join(lines[1:]) or "some jumps failed certification")
    return result, "\n".join(lines)


def cmd_fpt(args, ring, cfg):
    try:
        value = fpt(_parametric(args.pair, ring), args.denom_bound, cfg)
    except NoJumpFound as exc:
        raise Diagnostic(str(exc)) from exc
    return {"fpt": _rat(value)}, _rat(value)


def cmd_froot(args, ring, cfg):
    if args.e < 1:
        raise UsageError("--e must be positive")
    J = frobenius_root(parse_ideal(args.ideal, ring), args.e)
    return {"e": args.e, "ideal": J.strings()}, str(J)


def cmd_gb(args, ring, cfg):
    I = parse_ideal(args.ideal, ring)
    return {"basis": I.strings()}, "\n".join(str(g) for g in I.gb)


def cmd_scaling(args, ring, cfg):
    if args.e < 1:
        raise UsageError("--e must be positive")
    pair = _parametric(args.pair, ring)
    lo, hi = parse_range(args.interval)
    report = enumerate_jumps(pair, lo, hi, args.denom_bound, cfg)
    rows = scaling_counterexample_check(pair, args.e, report, cfg)
    result = {"e": args.e, "rows": [{"t": _rat(t), "scaled": _rat(s), "is_jump": b}
                                    for t, s, b in rows]}
    text = "\n".join(f"{t} -> {s}: {'jump' if b else 'not a jump'}" for t, s, b in rows)
    return result, text or "no certified jumps in range"


def cmd_verify(args, ring, cfg):
    names = args.suite or ["all"]
    if "all" in names:
        names = "all"
    results = run_suites(names, args.seed, cfg)
    result = {"seed": args.seed, "suites": [
        {"name": r.name, "passed": r.passed, "failed": r.failed, "failures": r.failures}
        for r in results]}
    lines = [r.summary() for r in results]
    for r in results:
        lines += [f"  {r.name} FAIL: {msg}" for msg in r.failures]
    text = "\n".join(lines)
    if any(not r.ok for r in results):
        raise Diagnostic(text, result)
    return result, text


COMMANDS = {"tau": cmd_tau, "jumps": cmd_jumps, "fpt": cmd_fpt, "froot": cmd_froot,
            "gb": cmd_gb, "scaling-check": cmd_scaling, "verify": cmd_verify}


def _emit(args, result, text, out):
    if args.json:
        doc = {"char": args.char, "vars": [v.strip() for v in (args.vars or "").split(",")
                                           if v.strip()],
               "command": args.command, "result": result}
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=err)
    try:
        cfg = _config(args)
        ring = None if args.command == "verify" else _ring(args)
        result, text = COMMANDS[args.command](args, ring, cfg)
    except (UsageError, ParseError) as exc:
        err.write(f"fjump: error: {exc}\n")
        return 2
    except Diagnostic as exc:
        if len(exc.args) > 1:
            _emit(args, exc.args[1], exc.args[0], out)
        else:
            err.write(f"fjump: {exc}\n")
        return 1
    except (NonStabilizationError, ChainAscentError) as exc:
        err.write(f"fjump: {exc}\n")
        return 1
    except ValueError as exc:
        err.write(f"fjump: error: {exc}\n")
        return 2
    _emit(args, result, text, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
