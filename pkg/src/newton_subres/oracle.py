"""Root-based ground truth and seeded test-instance generation.

Everything here works from the roots of ``F0`` (distinct rationals) and never
touches the companion-matrix construction, so it can check it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Matrix, PolyMatrix, det_exact, det_polymatrix
from .errors import ParameterError, SingularOracleError
from .poly import PowerPoly, poly_gcd, power_to_newton
from .subres import PolySystem, delta_params


@dataclass(frozen=True)
class RootedSystem:
    """A system whose ``F0 = lead * prod(x - root)`` is known in factored form.

    ``gcd`` and ``cofactors`` are set for planted instances ``Fi = gcd * Ci``.
    """

    base: PolySystem
    roots: tuple
    lead: Fraction
    gcd: PowerPoly = None
    cofactors: tuple = ()

    def has_distinct_roots(self):
        return len(set(self.roots)) == len(self.roots)


def vandermonde_matrix(roots):
    n = len(roots)
    return Matrix(n, n, [Fraction(a) ** i for i in range(n) for a in roots])


def vandermonde_det(roots):
    out = Fraction(1)
    for j in range(len(roots)):
        for i in range(j):
            out *= Fraction(roots[j]) - Fraction(roots[i])
    return out


def _check(rs):
    if not rs.has_distinct_roots():
        raise SingularOracleError("root-based formula needs pairwise distinct roots")
    if len(rs.roots) != rs.base.d0:
        raise ParameterError("root list does not match deg F0")


def _root_matrix(rs, delta, row_weight):
    """Block matrix with rows ``w_j(a) Fi(a)`` then ``w_j(a) (x - a)``."""
    roots = [Fraction(a) for a in rs.roots]
    rows = []
    for f, k in zip(rs.base.fs, delta.delta):
        vals = [f(a) for a in roots]
        for j in range(k):
            rows.append([PowerPoly.constant(row_weight(j, a) * v) for a, v in zip(roots, vals)])
    for j in range(delta.eps):
        rows.append([PowerPoly((-a, 1)) * row_weight(j, a) for a in roots])
    return PolyMatrix.from_rows(rows, len(roots))


def sres_roots_power(rs: RootedSystem, delta) -> PowerPoly:
    _check(rs)
    delta = delta_params(rs.base.degrees, getattr(delta, "delta", delta))
    m = _root_matrix(rs, delta, lambda j, a: a ** j)
    num = det_polymatrix(m, delta.eps)
    return num * (Fraction(rs.lead) ** delta.delta0 / vandermonde_det(rs.roots))


def _newton_value(knots, j, a):
    out = Fraction(1)
    for lam in knots[:j]:
        out *= a - lam
    return out


def sres_roots_newton(rs: RootedSystem, delta, knots):
    """Same formula with ``B_j(a)`` in place of ``a^j``, normalized by ``det Bt(alpha)``."""
    _check(rs)
    knots = tuple(Fraction(v) for v in knots)
    d0 = rs.base.d0
    if len(knots) != d0:
        raise ParameterError(f"need {d0} knots")
    delta = delta_params(rs.base.degrees, getattr(delta, "delta", delta))
    roots = [Fraction(a) for a in rs.roots]
    m = _root_matrix(rs, delta, lambda j, a: _newton_value(knots, j, a))
    bt = Matrix(d0, d0, [_newton_value(knots, j, a) for j in range(d0) for a in roots])
    num = det_polymatrix(m, delta.eps)
    p = num * (Fraction(rs.lead) ** delta.delta0 / det_exact(bt))
    return power_to_newton(p, knots)


def random_knots(rng, n, lo=-5, hi=5):
    """Rationals ``p/q`` in ``[lo, hi]`` with ``q`` in 1..3."""
    out = []
    for _ in range(n):
        q = rng.randint(1, 3)
        out.append(Fraction(rng.randint(lo * q, hi * q), q))
    return tuple(out)


def _random_poly(rng, deg, bound=5):
    if deg == 0:
        return PowerPoly.constant(rng.choice([v for v in range(-bound, bound + 1) if v]))
    coeffs = [rng.randint(-bound, bound) for _ in range(deg)]
    coeffs.append(rng.choice([v for v in range(-bound, bound + 1) if v]))
    return PowerPoly(coeffs)


def _coprime(a, b):
    return poly_gcd(a, b).degree == 0


def make_planted_instance(seed, t, deg_gcd, cofactor_degrees, root_mode="distinct",
                          coprime=True, root_range=9):
    """Seeded system ``Fi = G * Ci`` with ``F0`` given by its roots.

    ``root_mode`` is ``"distinct"`` (integer roots drawn without replacement
    from ``[-root_range, root_range]``, widened if too small) or
    ``"repeated"`` (F0 gets a multiple root; the root oracle does not apply).
    With ``coprime`` the cofactors ``C0..Ct`` are pairwise coprime, so
    ``gcd(F) = G``; otherwise each ``Ci`` may pick up some roots of ``C0``.
    """
    cofactor_degrees = tuple(cofactor_degrees)
    if len(cofactor_degrees) != t + 1 or t < 1:
        raise ParameterError("need t >= 1 and t + 1 cofactor degrees")
    if deg_gcd < 0 or min(cofactor_degrees) < 0:
        raise ParameterError("degrees must be non-negative")
    d0 = deg_gcd + cofactor_degrees[0]
    if d0 < 1 or max(cofactor_degrees[1:]) > cofactor_degrees[0]:
        raise ParameterError(f"degree profile impossible: d0={d0}, cofactors={cofactor_degrees}")
    if root_mode not in ("distinct", "repeated"):
        raise ParameterError(f"unknown root_mode {root_mode!r}")
    rng = random.Random(seed)
    lead = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
    span = max(root_range, d0)
    pool = list(range(-span, span + 1))
    if root_mode == "distinct":
        roots = rng.sample(pool, d0)
        g_roots, c0_roots = roots[:deg_gcd], roots[deg_gcd:]
    else:
        if deg_gcd >= 2:
            g_roots = rng.sample(pool, deg_gcd - 1)
            g_roots.append(rng.choice(g_roots))
            c0_roots = rng.sample(pool, cofactor_degrees[0])
        elif deg_gcd == 1 and cofactor_degrees[0] >= 1:
            g_roots = rng.sample(pool, 1)
            c0_roots = g_roots + rng.sample(pool, cofactor_degrees[0] - 1)
        elif cofactor_degrees[0] >= 2:
            g_roots = []
            c0_roots = rng.sample(pool, cofactor_degrees[0] - 1)
            c0_roots.append(rng.choice(c0_roots))
        else:
            raise ParameterError("profile too small for a repeated root")
        roots = g_roots + c0_roots
    g = PowerPoly.from_roots(g_roots)
    cofactors = [PowerPoly.from_roots(c0_roots, lead)]
    for deg in cofactor_degrees[1:]:
        for _ in range(1000):
            if coprime:
                c = _random_poly(rng, deg)
                if all(_coprime(c, other) for other in cofactors):
                    break
            else:
                shared = rng.sample(c0_roots, rng.randint(0, min(deg, len(c0_roots))))
                c = PowerPoly.from_roots(shared) * _random_poly(rng, deg - len(shared))
                break
        else:
            raise ParameterError("could not draw pairwise coprime cofactors")
        cofactors.append(c)
    polys = [g * c for c in cofactors]
    base = PolySystem.from_power(polys)
    return RootedSystem(base, tuple(Fraction(r) for r in roots), lead, g, tuple(cofactors))


def random_profile(rng, t, max_d0=6, max_gcd=None):
    """Random ``(deg_gcd, cofactor_degrees)`` with ``d0 <= max_d0``."""
    d0 = rng.randint(1, max_d0)
    top = d0 if max_gcd is None else min(d0, max_gcd)
    g = rng.randint(0, top)
    c0 = d0 - g
    if c0 == 0 and g == d0:
        cof = (0,) + tuple(0 for _ in range(t))
    else:
        cof = (c0,) + tuple(rng.randint(0, c0) for _ in range(t))
    return g, cof


def sylvester_subresultant(a: PowerPoly, b: PowerPoly, k: int) -> PowerPoly:
    """Textbook order-``k`` subresultant: determinantal polynomial of the matrix
    of ``x^i * A`` (``n-k`` rows) and ``x^i * B`` (``m-k`` rows), coefficients
    written highest power first."""
    m, n = a.degree, b.degree
    if not 0 <= k <= min(m, n) or (m - k) + (n - k) == 0:
        raise ParameterError(f"order {k} undefined for degrees {m}, {n}")
    width = m + n - k
    rows = []
    for p, count in ((a, n - k), (b, m - k)):
        desc = list(reversed(p.coeffs))
        for i in range(count - 1, -1, -1):
            # x^i * p occupies width columns, leading coefficient at column width-1-(deg p + i)
            row = [Fraction(0)] * width
            start = width - 1 - (p.degree + i)
            for c_idx, c in enumerate(desc):
                row[start + c_idx] = c
            rows.append(row)
    r = len(rows)
    mat = Matrix.from_rows(rows, width)
    out = PowerPoly()
    for j in range(width - r + 1):
        cols = list(range(r - 1)) + [width - 1 - j]
        d = det_exact(mat.select_columns(cols))
        if d:
            out = out + PowerPoly([0] * j + [d])
    return out
