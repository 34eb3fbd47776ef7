"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .bounds import lambda_main, lambda_prime, log_le
from .errors import CovercertError, InputError
from .heights.logvalue import LogValue
from .io import dumps, load_curve
from .pipeline import run_analyze, run_verify
from .suites import SUITES, run_suites

SCHEMA = 1


def _emit(payload: dict, args, text: str | None = None) -> None:
    payload = {"schema": SCHEMA, **payload}
    body = dumps(payload) if args.json or text is None else text
    if args.out:
        Path(args.out).write_text(dumps(payload))
    if not args.out or not args.json:
        sys.stdout.write(body if body.endswith("\n") else body + "\n")


def _checks_text(out) -> str:
    lines = []
    for name, ok, clause in out.checks:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name:32s} {clause}")
    fails = out.failures
    lines.append("all checks passed" if not fails else f"first failure: {fails[0][0]} -- {fails[0][2]}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    ci = load_curve(args.curve)
    try:
        out = run_analyze(ci, args.prec)
    except InputError:
        raise
    except CovercertError as exc:
        _emit({"command": "analyze", "error": type(exc).__name__, "message": str(exc)}, args,
              f"{type(exc).__name__}: {exc}")
        return 1
    rep = out.sections["report"]
    text = (f"m = {rep['model']['m']}, n = {rep['model']['n']}, d = {rep['d']}, "
            f"mu = {rep['mu']}, nu = {rep['nu']}, omega = {rep['omega']}, "
            f"kappa_inf = {rep['infinity']['kappas']}")
    _emit({"command": "analyze", **out.sections}, args, text)
    return 0


def cmd_vset(args) -> int:
    ci = load_curve(args.curve)
    out = run_verify(ci, args.prec, with_equations=True)
    if args.emit:
        Path(args.emit).write_text(dumps({"schema": SCHEMA, **out.sections.get("V", {})}))
    payload = {"command": "vset", "V": out.sections.get("V"), "membership": out.sections.get("membership"),
               "passed": out.passed}
    _emit(payload, args, _checks_text(out))
    return 0 if out.passed else 1


def cmd_verify(args) -> int:
    ci = load_curve(args.curve)
    out = run_verify(ci, args.prec)
    _emit({"command": "verify", "seed": args.seed, **out.to_json()}, args, _checks_text(out))
    return 0 if out.passed else 1


def cmd_bounds(args) -> int:
    g, n = args.genus, args.degree
    if g < 0 or n < 2:
        raise InputError("need --genus >= 0 and --degree >= 2")
    m = g + 1
    lam, lamp = lambda_main(g, n), lambda_prime(m, n)
    payload = {"command": "bounds", "genus": g, "degree": n, "m": m,
               "Lambda": str(lam), "LambdaPrime": str(lamp), "LambdaPrime_le_Lambda": lamp <= lam}
    lines = [f"Lambda(g={g}, n={n})  = {lam}", f"Lambda'(m={m}, n={n}) = {lamp}"]
    if args.height is not None:
        try:
            h = Fraction(args.height)
        except ValueError as exc:
            raise InputError(f"bad --height {args.height!r}") from exc
        if h < 0:
            raise InputError("--height must be non-negative")
        payload["height"] = str(h)
        payload["Lambda_h_plus_1"] = str(lam * (h + 1))
        payload["LambdaPrime_h_plus_1"] = str(lamp * (h + 1))
        lines.append(f"Lambda(h+1)  = {lam * (h + 1)}")
        lines.append(f"Lambda'(h+1) = {lamp * (h + 1)}")
        if args.hf is not None:
            hf = LogValue.log(Fraction(args.hf))
            ok, how = log_le(hf, LogValue.rational(h + 1) * lam)
            payload["log_hf_le_Lambda_h_plus_1"] = ok
            lines.append(f"log({args.hf}) <= Lambda(h+1): {ok} ({how})")
    _emit(payload, args, "\n".join(lines))
    return 0


def cmd_lemma_suite(args) -> int:
    if args.count < 1:
        raise InputError("--count must be >= 1")
    names = args.suite or list(SUITES)
    for nm in names:
        if nm not in SUITES:
            raise InputError(f"unknown suite {nm!r}; choose from {sorted(SUITES)}")
    results = run_suites(args.seed, args.count, names)
    ok = all(r.ok for r in results)
    lines = [f"{r.name:10s} {r.passed}/{r.count} passed, {r.skipped} skipped  {'ok' if r.ok else 'FAIL'}"
             for r in results]
    for r in results:
        if not r.ok:
            lines.append(f"counterexample ({r.name}): {dumps(r.counterexample)}")
    _emit({"command": "lemma-suite", "seed": args.seed, "count": args.count,
           "results": [r.to_json() for r in results], "passed": ok}, args, "\n".join(lines))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--prec", type=int, default=4096, help="cap on series terms (>= 64)")
    common.add_argument("--out", help="also write the JSON report here")

    p = argparse.ArgumentParser(prog="covercert", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="discriminant, branches and dimension count")
    a.add_argument("curve")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("vset", parents=[common], help="build V and W and check membership")
    v.add_argument("curve")
    v.add_argument("--emit", help="write the equations of V to this file")
    v.set_defaults(func=cmd_vset)

    c = sub.add_parser("verify", parents=[common], help="run the full certification pipeline")
    c.add_argument("curve")
    c.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", parents=[common], help="evaluate Lambda and Lambda'")
    b.add_argument("--genus", type=int, required=True)
    b.add_argument("--degree", type=int, required=True)
    b.add_argument("--height", help="h as an exact rational")
    b.add_argument("--hf", help="compare log(HF) against Lambda(h+1)")
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("lemma-suite", parents=[common], help="seeded randomized lemma checks")
    s.add_argument("--count", type=int, default=500)
    s.add_argument("--suite", action="append", help="restrict to the named suite (repeatable)")
    s.set_defaults(func=cmd_lemma_suite)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.prec < 64:
            raise InputError("--prec must be at least 64")
        return args.func(args)
    except InputError as exc:
        print(f"covercert: input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
