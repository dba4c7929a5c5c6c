"""Command-line front end.

Every number printed is an exact rational unless ``--circle`` is given.
Exit codes: 0 success, 2 malformed input, 3 input outside an operation's domain.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Callable

from . import digits as dg
from . import element as el
from . import measure as ms
from . import metric as mt
from . import solenoid as sol
from . import structure as st
from .errors import DomainError, ParseError
from .rational import PrimeContext, format_rational, parse_rational

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Let "-3/4" through as a positional rational rather than an option.
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"not an integer: {text!r}") from None


def _elements(xs) -> str:
    return "\n".join(el.format_element(x) for x in xs)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _cmd_canon(a, ctx):
    return el.format_element(el.from_pair(parse_rational(a.q), parse_rational(a.r), ctx))


def _cmd_add(a, ctx):
    return el.format_element(el.parse_element(a.x, ctx) + el.parse_element(a.y, ctx))


def _cmd_neg(a, ctx):
    return el.format_element(-el.parse_element(a.x, ctx))


def _cmd_abs(a, ctx):
    return format_rational(mt.abs_value(el.parse_element(a.x, ctx)))


def _cmd_dist(a, ctx):
    return format_rational(mt.dist(el.parse_element(a.x, ctx), el.parse_element(a.y, ctx)))


def _cmd_sf(a, ctx):
    shift = _int(a.a)
    s = el.standard_form_at(el.parse_element(a.x, ctx), shift)
    return f"[{format_rational(s.whole_a)}]_{shift} + {{{format_rational(s.frac_a)}}}_{shift}"


def _cmd_tau(a, ctx):
    return el.format_element(el.tau(parse_rational(a.s), ctx))


def _cmd_order(a, ctx):
    order = el.torsion_order(el.parse_element(a.x, ctx))
    return "none" if order is None else str(order)


def _cmd_divide(a, ctx):
    return _elements(st.division_points(el.parse_element(a.x, ctx), _int(a.n)))


def _cmd_classify(a, ctx):
    if a.irrational:
        r = st.IRRATIONAL
    elif a.r is None:
        raise ParseError("classify needs a real part or --irrational")
    else:
        r = parse_rational(a.r)
    return str(st.classify_closure(parse_rational(a.q), r, ctx))


def _cmd_char(a, ctx):
    return format_rational(st.character_eval(parse_rational(a.rho), el.parse_element(a.x, ctx)))


def _cmd_kernel(a, ctx):
    return str(st.character_kernel(parse_rational(a.rho), ctx))


def _cmd_measure(a, ctx):
    return format_rational(ms.haar_measure(ms.parse_cylinder(a.cylinder, ctx)))


def _cmd_contains(a, ctx):
    c = ms.parse_cylinder(a.cylinder, ctx)
    return _bool(ms.cylinder_contains(c, el.parse_element(a.x, ctx)))


def _cmd_digits(a, ctx):
    return dg.format_digits(dg.expand(el.parse_element(a.x, ctx), _int(a.lo), _int(a.hi)))


def _cmd_fromdigits(a, ctx):
    return el.format_element(dg.from_digits(dg.parse_digits(a.string, ctx), ctx))


def _cmd_coords(a, ctx):
    seq = sol.coords(el.parse_element(a.x, ctx), _int(a.depth))
    if a.circle:
        pairs = (sol.circle_form(p) for p in seq.points)
        d = sol.CIRCLE_DIGITS
        return ", ".join(f"({c:.{d}f}, {s:.{d}f})" for c, s in pairs)
    return ", ".join(format_rational(p) for p in seq.points)


def _cmd_net(a, ctx):
    return _elements(mt.epsilon_net(_int(a.k), ctx))


def _cmd_approx(a, ctx):
    x = el.parse_element(a.x, ctx)
    n = _int(a.n)
    value = mt.approximate_real(x, n) if a.side == "real" else mt.approximate_padic(x, n)
    return format_rational(value)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ladic", description="Exact arithmetic on the l-adic compactification of R.")
    parser.add_argument("--ell", required=True, help="the prime ell")
    parser.add_argument("--circle", action="store_true", help="print torus points as (cos, sin)")
    parser.add_argument("--json", action="store_true", help='wrap output as {"ok": ..., "result": ...}')
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def cmd(name: str, func: Callable, help: str, *args: str):
        p = sub.add_parser(name, help=help)
        for arg in args:
            p.add_argument(arg)
        p.set_defaults(func=func)
        return p

    cmd("canon", _cmd_canon, "standard form of the class of (q, r)", "q", "r")
    cmd("add", _cmd_add, "sum of two elements", "x", "y")
    cmd("neg", _cmd_neg, "negation", "x")
    cmd("abs", _cmd_abs, "absolute value |x|", "x")
    cmd("dist", _cmd_dist, "distance |x - y|", "x", "y")
    cmd("sf", _cmd_sf, "standard form cut at ell**a", "a", "x")
    cmd("tau", _cmd_tau, "torsion point tau(s)", "s")
    cmd("order", _cmd_order, "torsion order, or 'none'", "x")
    cmd("divide", _cmd_divide, "all y with n*y = x", "n", "x")
    p = cmd("classify", _cmd_classify, "closure class of Z*x, x = q + r", "q")
    p.add_argument("r", nargs="?")
    p.add_argument("--irrational", action="store_true", help="the real part is irrational")
    cmd("char", _cmd_char, "character chi_rho(x)", "rho", "x")
    cmd("kernel", _cmd_kernel, "kernel descriptor of chi_rho", "rho")
    cmd("measure", _cmd_measure, "Haar measure of a cylinder", "cylinder")
    cmd("contains", _cmd_contains, "cylinder membership", "cylinder", "x")
    cmd("digits", _cmd_digits, "digit expansion over [lo, hi)", "lo", "hi", "x")
    cmd("fromdigits", _cmd_fromdigits, "element from a digit string", "string")
    cmd("coords", _cmd_coords, "solenoid coordinates x_0 .. x_N", "depth", "x")
    cmd("net", _cmd_net, "epsilon-net of radius ell**-k", "k")
    p = sub.add_parser("approx", help="rational approximation within ell**-N")
    p.add_argument("side", choices=["real", "padic"])
    p.add_argument("n")
    p.add_argument("x")
    p.set_defaults(func=_cmd_approx)
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE

    def emit(ok: bool, text: str) -> None:
        if args.json:
            print(json.dumps({"ok": ok, "result": text}), file=out)
        elif ok:
            print(text, file=out)
        else:
            print(f"ladic: error: {text}", file=err)

    try:
        ctx = PrimeContext(_int(args.ell))
        result = args.func(args, ctx)
    except ParseError as exc:
        emit(False, str(exc))
        return EXIT_PARSE
    except DomainError as exc:
        emit(False, str(exc))
        return EXIT_DOMAIN
    emit(True, result)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
