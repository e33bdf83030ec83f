"""``newton-subres`` command line front end."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from fractions import Fraction

from . import kernels
from .companion import companion_matrix
from .errors import SubresError
from .gcdsolve import gcd_via_sres, icdeg_direct
from .oracle import make_planted_instance, random_knots
from .parser import parse_poly
from .poly import format_newton, format_power, newton_to_power, power_to_newton, rational_roots
from .selftest import admissible_deltas, run_selftest
from .subres import PolySystem, build_N, delta_params, evaluated_companions, sres

EXIT_OK, EXIT_INVARIANT, EXIT_USAGE = 0, 1, 2


class UsageError(SubresError):
    pass


def _q(v):
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def _tuple(vals):
    return "(" + ", ".join(str(v) for v in vals) + ")"


def _list(vals):
    return "[" + ", ".join(str(v) for v in vals) + "]"


def latex_power(p):
    terms = [(k, c) for k, c in enumerate(p.coeffs) if c]
    if not terms:
        return "0"
    out = ""
    for k, c in reversed(terms):
        neg = c < 0
        c = abs(c)
        num = "" if (c == 1 and k) else (
            str(c) if c.denominator == 1 else rf"\frac{{{c.numerator}}}{{{c.denominator}}}")
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{{{k}}}")
        term = num + mono
        if not out:
            out = ("-" if neg else "") + term
        else:
            out += (" - " if neg else " + ") + term
    return out


def parse_knots(spec, f0):
    d0 = f0.degree
    if spec is None or spec == "zeros":
        return (Fraction(0),) * d0
    if spec == "roots":
        roots = rational_roots(f0)
        if roots is None:
            raise UsageError("--knots roots: F0 does not split over Q")
        return tuple(roots)
    try:
        knots = tuple(Fraction(v.strip()) for v in spec.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --knots value {spec!r}: {exc}") from None
    if len(knots) != d0:
        raise UsageError(f"--knots needs exactly {d0} values, got {len(knots)}")
    return knots


def parse_delta(spec, t):
    if spec is None:
        raise UsageError("--delta is required")
    try:
        delta = tuple(int(v) for v in spec.split(","))
    except ValueError:
        raise UsageError(f"bad --delta value {spec!r}") from None
    if len(delta) != t:
        raise UsageError(f"--delta needs {t} entries, got {len(delta)}")
    return delta


def reorder(polys):
    """Move the first polynomial of maximal degree to the front; returns the
    new list and the 1-based input positions in the new order."""
    top = max(p.degree for p in polys)
    lead = next(i for i, p in enumerate(polys) if p.degree == top)
    order = [lead] + [i for i in range(len(polys)) if i != lead]
    return [polys[i] for i in order], tuple(i + 1 for i in order)


def _system(args, need=2):
    if len(args.polys) < need:
        raise UsageError(f"{args.command} needs at least {need} polynomials")
    polys = [parse_poly(s) for s in args.polys]
    for i, p in enumerate(polys):
        if p.is_zero():
            raise UsageError(f"polynomial {i + 1} is zero")
    polys, order = reorder(polys)
    if polys[0].degree < 1:
        raise UsageError("F0 must have degree >= 1")
    knots = parse_knots(args.knots, polys[0])
    return PolySystem.from_power(polys, knots), order


def _order_lines(order):
    if order != tuple(range(1, len(order) + 1)):
        return [f"order = {_tuple(order)}"]
    return []


def cmd_sres(args):
    system, order = _system(args)
    delta = delta_params(system.degrees, parse_delta(args.delta, system.t))
    res = sres(system, delta)
    power = newton_to_power(res.poly)
    if args.format == "json":
        doc = {
            "delta": list(delta.delta),
            "delta0": delta.delta0,
            "eps": delta.eps,
            "sign": res.sign,
            "knots": [_q(v) for v in system.knots],
            "newton_coeffs": [_q(v) for v in res.poly.coeffs],
            "power_coeffs": [_q(v) for v in power.coeffs],
            "leading": _q(res.leading),
        }
        if len(order) > 1 and order != tuple(range(1, len(order) + 1)):
            doc["order"] = list(order)
        return json.dumps(doc, sort_keys=True)
    lines = _order_lines(order)
    if args.format == "newton":
        lines.append(f"knots = {_list(system.knots)}")
        lines.append(f"S = {format_newton(res.poly)}")
    elif args.format == "latex":
        lines.append(f"S = {latex_power(power)}")
    else:
        lines.append(f"S = {format_power(power)}")
    lines += [
        f"delta = {_tuple(delta.delta)}",
        f"delta0 = {delta.delta0}",
        f"eps = {delta.eps}",
        f"sign = {res.sign}",
        f"leading = {res.leading}",
    ]
    return "\n".join(lines)


def cmd_gcd(args):
    system, order = _system(args)
    rep = gcd_via_sres(system)
    power = newton_to_power(rep.gcd_poly)
    if args.format == "json":
        doc = {
            "delta_star": list(rep.delta_star.delta),
            "icdeg": list(rep.icdeg),
            "knots": [_q(v) for v in system.knots],
            "newton_coeffs": [_q(v) for v in rep.gcd_poly.coeffs],
            "power_coeffs": [_q(v) for v in power.coeffs],
        }
        if args.verbose:
            doc["scan"] = [[list(g), _q(s)] for g, s in rep.scan_log]
        return json.dumps(doc, sort_keys=True)
    lines = _order_lines(order)
    lines.append(f"delta* = {_tuple(rep.delta_star.delta)}")
    if args.format == "newton":
        lines.append(f"knots = {_list(system.knots)}")
        lines.append(f"gcd = {format_newton(rep.gcd_poly)}")
    elif args.format == "latex":
        lines.append(f"gcd = {latex_power(power)}")
    else:
        lines.append(f"gcd = {format_power(power)}")
    lines.append(f"icdeg = {_tuple(rep.icdeg)}")
    if args.verbose:
        for g, s in rep.scan_log:
            lines.append(f"scan {_tuple(g)} s = {s}")
    return "\n".join(lines)


def cmd_icdeg(args):
    system, order = _system(args)
    ic = icdeg_direct(system)
    if args.format == "json":
        return json.dumps({"icdeg": list(ic)})
    return "\n".join(_order_lines(order) + [f"icdeg = {_tuple(ic)}"])


def _single(args):
    if len(args.polys) != 1:
        raise UsageError(f"{args.command} takes exactly one polynomial")
    p = parse_poly(args.polys[0])
    if p.is_zero() or p.degree < 1:
        raise UsageError(f"{args.command} needs a polynomial of degree >= 1")
    return p, parse_knots(args.knots, p)


def cmd_companion(args):
    p, knots = _single(args)
    comp = companion_matrix(power_to_newton(p, knots))
    rows = comp.matrix.tolist()
    if args.format == "json":
        return json.dumps({
            "knots": [_q(v) for v in knots],
            "scale": _q(comp.scale),
            "matrix": [[_q(v) for v in r] for r in rows],
        })
    return "[" + ", ".join(_list(r) for r in rows) + "]"


def cmd_convert(args):
    p, knots = _single(args)
    newton = power_to_newton(p, knots)
    if args.format == "json":
        return json.dumps({
            "knots": [_q(v) for v in knots],
            "newton_coeffs": [_q(v) for v in newton.coeffs],
            "power_coeffs": [_q(v) for v in p.coeffs],
        })
    return "\n".join([
        f"knots = {_list(knots)}",
        f"newton = {format_newton(newton)}",
        f"power = {format_power(p)}",
    ])


def cmd_selftest(args):
    start = time.perf_counter()
    tally = run_selftest(args.seed)
    lines = [f"selftest seed={args.seed} backend={kernels.BACKEND}: "
             f"{tally.passed} passed, {tally.failed} failed"]
    if args.verbose:
        lines.append(f"elapsed {time.perf_counter() - start:.2f}s")
    lines += [f"FAIL {label}" for label in tally.failures[:20]]
    return "\n".join(lines), (EXIT_INVARIANT if tally.failed else EXIT_OK)


def _coeff_bits(values):
    return max((max(v.numerator.bit_length(), v.denominator.bit_length()) for v in values), default=0)


def cmd_bench(args):
    rng = random.Random(args.seed)
    out = ["strategy,d0,t,delta,wall_ns,max_coeff_bits"]
    for d0 in range(2, 7):
        for t in (1, 2):
            g = rng.randint(0, d0 - 1)
            cof = (d0 - g,) + tuple(rng.randint(0, d0 - g) for _ in range(t))
            rs = make_planted_instance(rng.randrange(2**32), t, g, cof, coprime=False)
            strategies = [
                ("zeros", (0,) * d0),
                ("roots", tuple(sorted(rs.roots))),
                ("integer", tuple(rng.randint(-5, 5) for _ in range(d0))),
                ("rational", random_knots(rng, d0)),
            ]
            deltas = [d for d in admissible_deltas(t, d0) if any(d) and d0 - sum(d) <= 1]
            for name, knots in strategies:
                system = rs.base.with_knots(knots)
                for d in deltas:
                    evaluated_companions.cache_clear()
                    start = time.perf_counter_ns()
                    res = sres(system, d)
                    wall = time.perf_counter_ns() - start
                    bits = _coeff_bits(build_N(system, d).entries + res.poly.coeffs)
                    out.append(f"{name},{d0},{t},{'-'.join(map(str, d))},{wall},{bits}")
    return "\n".join(out)


COMMANDS = {
    "sres": cmd_sres,
    "gcd": cmd_gcd,
    "icdeg": cmd_icdeg,
    "companion": cmd_companion,
    "convert": cmd_convert,
    "selftest": cmd_selftest,
    "bench": cmd_bench,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--delta", help="multi-index, e.g. 2,1")
    common.add_argument("--knots", help="v1,v2,... | zeros | roots (default zeros)")
    common.add_argument("--format", choices=["plain", "newton", "json", "latex"], default="plain")
    common.add_argument("--seed", type=int, default=int(os.environ.get("NEWTON_SUBRES_SEED", 0)))
    common.add_argument("--verbose", action="store_true")
    parser = argparse.ArgumentParser(
        prog="newton-subres",
        description="Subresultants and gcds of polynomials in Newton basis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("polys", nargs="*", metavar="poly")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except SubresError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
