"""gcd and incremental cofactor degrees from the subresultant family."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .poly import NewtonPoly, poly_gcd
from .subres import DeltaIndex, PolySystem, delta_params, leading_coeff_sres, sres


@dataclass(frozen=True)
class GcdReport:
    delta_star: DeltaIndex
    gcd_poly: NewtonPoly
    icdeg: tuple
    scan_log: tuple


def glex_enumerate(t: int, bound: int):
    """All of ``N^t`` with total degree <= bound, in descending graded-lex order
    (total degree first, then lexicographic with the first entry most significant)."""
    out = [g for g in product(range(bound + 1), repeat=t) if sum(g) <= bound]
    out.sort(key=lambda g: (sum(g), g), reverse=True)
    return out


def gcd_via_sres(system: PolySystem) -> GcdReport:
    """Scan candidates in descending glex order and stop at the first one whose
    principal coefficient is nonzero."""
    log = []
    for gamma in glex_enumerate(system.t, system.d0):
        delta = delta_params(system.degrees, gamma)
        s = leading_coeff_sres(system, delta)
        log.append((gamma, s))
        if s:
            res = sres(system, delta)
            return GcdReport(delta, res.poly, gamma, tuple(log))
    raise AssertionError("unreachable: gamma = 0 always has a nonzero coefficient")


def icdeg_direct(system: PolySystem):
    """Successive drops ``deg gcd(F0..F_{i-1}) - deg gcd(F0..F_i)`` via Euclid."""
    polys = system.power_polys()
    g = polys[0]
    prev = g.degree
    out = []
    for f in polys[1:]:
        g = poly_gcd(g, f)
        out.append(prev - g.degree)
        prev = g.degree
    return tuple(out)
