"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage/parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import sequences as sq
from . import series as sr
from .ideals import baxter_ideal_member, scalar_ideal, variable_ideal
from .lang import RESERVED, EvalError, ParseError, evaluate, parse
from .rings import INT, RAT, Ring, Zmod, parse_coeff
from .shuffle import Context, Element, enumerate_mixable_shuffles
from .verify import DEFAULT_PRECISION, DEFAULT_SEED, SUITES, PreconditionError, run_suites


def _ring_arg(text: str) -> Ring:
    if text == "int":
        return INT
    if text == "rat":
        return RAT
    if text.startswith("mod:"):
        try:
            return Zmod(int(text[4:]))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    raise argparse.ArgumentTypeError(f"unknown ring {text!r} (use int, rat or mod:<m>)")


def _vars_arg(text: str) -> tuple[str, ...]:
    if not text:
        return ()
    names = tuple(v.strip() for v in text.split(","))
    for v in names:
        if not v.isidentifier():
            raise argparse.ArgumentTypeError(f"invalid variable name {v!r}")
        if v in RESERVED:
            raise argparse.ArgumentTypeError(f"{v!r} is a reserved word")
    return names


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="freebax",
        description="Exact computation in free Baxter algebras of arbitrary weight.",
    )
    ap.add_argument("--ring", type=_ring_arg, default=INT, help="coefficient ring: int, rat or mod:<m>")
    ap.add_argument("--lambda", dest="lam", default="1", help="the weight (a coefficient literal)")
    ap.add_argument("--vars", type=_vars_arg, default=(), help="comma-separated variable names")
    ap.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="series truncation degree")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized probes")
    ap.add_argument("--json", action="store_true", help="emit a machine-readable report")

    sub = ap.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression")
    p_eval.add_argument("expression")

    p_phi = sub.add_parser("phi", help="map an expression into the sequence model")
    p_phi.add_argument("expression")
    p_phi.add_argument("--len", dest="length", type=int, default=DEFAULT_PRECISION,
                       help="number of sequence entries")

    p_ideal = sub.add_parser("ideal-member", help="test membership in a Baxter ideal")
    p_ideal.add_argument("expression")
    p_ideal.add_argument("--gens", required=True,
                         help="comma-separated variables, or scalar:<c>")

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("suite", nargs="+", choices=sorted(SUITES) + ["all"])

    p_enum = sub.add_parser("enumerate-shuffles", help="list all mixable shuffles of two tails")
    p_enum.add_argument("m", type=int)
    p_enum.add_argument("n", type=int)

    return ap


def _context(args) -> Context:
    lam = parse_coeff(args.ring, args.lam)
    return Context(args.ring, lam, args.vars)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cmd_eval(args) -> int:
    ctx = _context(args)
    value = evaluate(parse(args.expression, ctx.variables), ctx, args.precision)
    _emit(args, {"command": "eval", "context": ctx.to_obj(), "result": value.to_obj()}, str(value))
    return 0


def _cmd_phi(args) -> int:
    ctx = _context(args)
    value = evaluate(parse(args.expression, ctx.variables), ctx, args.precision)
    if isinstance(value, sr.Series):
        image = sq.phi_series(value, args.length)
    else:
        image = sq.phi(value, args.length)
    _emit(args, {"command": "phi", "context": ctx.to_obj(), "result": image.to_obj()}, str(image))
    return 0


def _parse_gens(ctx: Context, text: str):
    if text.startswith("scalar:"):
        return scalar_ideal(parse_coeff(ctx.ring, text[len("scalar:"):]))
    return variable_ideal(*_vars_arg(text))


def _cmd_ideal_member(args) -> int:
    ctx = _context(args)
    spec = _parse_gens(ctx, args.gens)
    value = evaluate(parse(args.expression, ctx.variables), ctx, args.precision)
    if not isinstance(value, Element):
        raise EvalError("ideal membership applies to finite elements")
    member = baxter_ideal_member(value, spec)
    _emit(
        args,
        {"command": "ideal-member", "context": ctx.to_obj(),
         "result": {"ideal": str(spec), "member": member}},
        "true" if member else "false",
    )
    return 0


def _cmd_verify(args) -> int:
    reports = run_suites(args.suite, seed=args.seed, precision=args.precision)
    ok = all(r.verdict for r in reports)
    if args.json:
        payload = {
            "command": "verify",
            "context": _context(args).to_obj(),
            "suites": args.suite,
            "report": [r.to_obj() for r in reports],
            "ok": ok,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in reports:
            print(r.line())
        print(f"{sum(r.verdict for r in reports)}/{len(reports)} checks passed")
    return 0 if ok else 1


def _cmd_enumerate(args) -> int:
    shuffles = enumerate_mixable_shuffles(args.m, args.n)
    if args.json:
        payload = {
            "command": "enumerate-shuffles",
            "m": args.m,
            "n": args.n,
            "count": len(shuffles),
            "shuffles": [s.to_obj() for s in shuffles],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for s in shuffles:
            merges = ",".join(str(k) for k in s.merges)
            print(f"sigma=({','.join(str(v) for v in s.sigma)}) merges=[{merges}]")
        print(f"count {len(shuffles)}")
    return 0


_DISPATCH = {
    "eval": _cmd_eval,
    "phi": _cmd_phi,
    "ideal-member": _cmd_ideal_member,
    "verify": _cmd_verify,
    "enumerate-shuffles": _cmd_enumerate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ParseError, EvalError, PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
