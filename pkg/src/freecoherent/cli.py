"""Command-line front end.

Exit codes: 0 all checks pass, 1 a property failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from decimal import Context, Decimal
from fractions import Fraction

from . import fock
from .coherent import DEFAULT_DEPTH, GammaParams, IndexSequence, coherent_truncate, eigen_residual, level_norm
from .metrics import (
    IDENTICAL,
    all_prefixes,
    check_ball_correspondence,
    check_equivalence_bounds,
    common_prefix,
    rho,
    tau_squared_closed,
    tau_squared_numeric,
)
from .padic import DEFAULT_PRECISION, padic_distance_exponent, parse_padic, valuation
from .verify import run_verification

COMMANDS = ("coherent", "rho", "tau", "bounds", "balls", "verify", "padic")


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    """``"p/q"`` or an integer; anything else (floats included) is rejected."""
    num, sep, den = text.strip().partition("/")
    try:
        if not sep:
            return Fraction(int(num))
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational 'p/q': {text!r}") from None


def parse_gamma(text: str) -> Fraction:
    g = parse_rational(text)
    if not 0 < g < 1:
        raise UsageError(f"gamma must satisfy 0 < gamma < 1, got {text!r}")
    return g


def parse_sequence(text: str) -> IndexSequence:
    try:
        return IndexSequence.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def rational(x: Fraction) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def exponent(k) -> object:
    return "inf" if k == math.inf else k


def approx(x: Fraction, digits: int = 12, sqrt: bool = False) -> str:
    """Decimal rendering (presentation only)."""
    ctx = Context(prec=digits + 5)
    val = ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
    if sqrt:
        val = val.sqrt(ctx)
    return format(Context(prec=digits).plus(val), "g")


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for '{args.command}'")


# -- commands ------------------------------------------------------------------

def cmd_coherent(args, g):
    _need(args, "u")
    s = parse_sequence(args.u)
    t = coherent_truncate(s, g, args.depth)
    res = eigen_residual(t)
    want = level_norm(s, g, args.depth) ** 2
    return [{
        "sequence": str(s),
        "depth": args.depth,
        "vector": fock.to_records(t.vector),
        "norm_sq": rational(fock.norm_squared(t.vector)),
        "eigen_residual_sq": rational(res),
        "top_level_norm_sq": rational(want),
        "pass": res == want,
    }]


def cmd_rho(args, g):
    _need(args, "u", "v")
    u, v = parse_sequence(args.u), parse_sequence(args.v)
    r = rho(u, v, g)
    return [{
        "u": str(u), "v": str(v),
        "common_prefix": exponent(common_prefix(u, v)),
        "rho": rational(r),
        "rho_sq": rational(r * r),
        "rho_approx": approx(r),
        "pass": True,
    }]


def cmd_tau(args, g):
    _need(args, "u", "v")
    u, v = parse_sequence(args.u), parse_sequence(args.v)
    k = common_prefix(u, v)
    if k == IDENTICAL:
        raise UsageError("tau needs two distinct sequences")
    if args.depth < k:
        raise UsageError(f"--depth {args.depth} is below the common prefix length {k}")
    closed = tau_squared_closed(u, v, g)
    num = tau_squared_numeric(u, v, g, args.depth)
    return [{
        "u": str(u), "v": str(v),
        "common_prefix": k,
        "tau_sq_closed": rational(closed),
        "tau_sq_numeric": rational(num.value),
        "tail_bound": rational(num.tail_bound),
        "tau_approx": approx(closed, sqrt=True),
        "pass": abs(closed - num.value) <= num.tail_bound,
    }]


def cmd_bounds(args, g):
    _need(args, "u", "v")
    u, v = parse_sequence(args.u), parse_sequence(args.v)
    if u == v:
        raise UsageError("bounds needs two distinct sequences")
    rep = check_equivalence_bounds(u, v, g, max(args.depth, common_prefix(u, v)))
    return [{
        "u": str(u), "v": str(v),
        "rho_sq": rational(rep.rho_sq),
        "tau_sq_closed": rational(rep.tau_sq_closed),
        "tau_sq_numeric": rational(rep.tau_sq_numeric),
        "tail_bound": rational(rep.tail_bound),
        "c0_sq": rational(rep.c0_sq),
        "c1_sq": rational(rep.c1_sq),
        "lower_ok": rep.lower_ok,
        "upper_ok": rep.upper_ok,
        "oracle_ok": rep.oracle_ok,
        "pass": rep.ok,
    }]


def cmd_balls(args, g):
    if not 0 <= args.n <= 12:
        raise UsageError("--n must lie in 0..12")
    if args.prefix is not None:
        if len(args.prefix) > args.n:
            raise UsageError("--prefix is longer than --n")
        prefixes = [args.prefix]
    else:
        prefixes = all_prefixes(args.n)
    out = []
    for p in prefixes:
        try:
            rep = check_ball_correspondence(p, args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        row = {"prefix": p, "n": rep.n, "checked": rep.checked, "members": rep.members, "pass": rep.ok}
        if rep.counterexample:
            row["counterexample"] = rep.counterexample
        out.append(row)
    return out


def cmd_padic(args, g):
    _need(args, "x")
    try:
        x = parse_padic(args.x, args.precision)
        y = parse_padic(args.y, args.precision) if args.y is not None else None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    row = {"x": x.digit_string(), "x_value": str(x.value), "precision": x.precision,
           "valuation": exponent(valuation(x)), "pass": True}
    if y is not None:
        row["y"] = y.digit_string()
        row["distance_exponent"] = exponent(padic_distance_exponent(x, y))
    return [row]


def cmd_verify(args, g):
    return run_verification(seed=args.seed, n=args.n, depth=args.depth, precision=args.precision)


HANDLERS = {
    "coherent": cmd_coherent,
    "rho": cmd_rho,
    "tau": cmd_tau,
    "bounds": cmd_bounds,
    "balls": cmd_balls,
    "verify": cmd_verify,
    "padic": cmd_padic,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freecoherent",
        description="Free coherent states, the metrics rho and tau, and 2-adic balls.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--gamma0", default="1/2", help="rational p/q in (0,1)")
    parser.add_argument("--gamma1", default="1/2", help="rational p/q in (0,1)")
    parser.add_argument("--u", help="sequence 'preperiod|period', e.g. '1|0'")
    parser.add_argument("--v", help="second sequence")
    parser.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help="truncation depth K")
    parser.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="2-adic precision N")
    parser.add_argument("--n", type=int, default=10, help="enumeration length for ball checks")
    parser.add_argument("--prefix", help="single ball prefix for 'balls' (default: all up to --n)")
    parser.add_argument("--x", help="2-adic literal: decimal integer or 'd:' + LSB-first digits")
    parser.add_argument("--y", help="second 2-adic literal")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--output", choices=("text", "json"), default="text")
    return parser


def config_dict(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "command"}


def render_text(doc: dict) -> str:
    lines = [f"command: {doc['command']}"]
    for row in doc["results"]:
        status = "PASS" if row.get("pass") else "FAIL"
        body = []
        for key, val in row.items():
            if key in ("pass", "vector"):
                continue
            if isinstance(val, dict) and set(val) == {"num", "den"}:
                val = val["num"] if val["den"] == "1" else f"{val['num']}/{val['den']}"
            body.append(f"{key}={val}")
        lines.append(f"[{status}] " + " ".join(body))
        if "vector" in row:
            for rec in row["vector"]:
                c = rec["num"] if rec["den"] == "1" else f"{rec['num']}/{rec['den']}"
                lines.append(f"    {rec['word'] or 'ε'}: {c}")
    lines.append("approx values are decimal approximations; exact values are rationals")
    lines.append(f"overall: {'PASS' if doc['pass'] else 'FAIL'}")
    return "\n".join(lines)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.depth < 0 or args.precision < 1 or args.n < 0:
            raise UsageError("--depth must be >= 0, --precision >= 1, --n >= 0")
        g = GammaParams(parse_gamma(args.gamma0), parse_gamma(args.gamma1))
        results = HANDLERS[args.command](args, g)
    except UsageError as exc:
        print(f"freecoherent: error: {exc}", file=sys.stderr)
        return 2
    doc = {
        "command": args.command,
        "config": config_dict(args),
        "results": results,
        "pass": all(r["pass"] for r in results),
    }
    if args.output == "json":
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        out.write(render_text(doc) + "\n")
    return 0 if doc["pass"] else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
