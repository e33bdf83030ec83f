"""Subresultants of several polynomials in a Newton basis.

For ``F = (F0, F1, ..., Ft)`` with ``F0`` written over knots ``l`` of length
``d0 = deg F0``, the delta-th subresultant is

    S_delta = (-1)^((d0-1)*eps) * a^delta0 * detp_B N(F)

where ``N`` stacks the transposed leading columns of ``Fi(Lambda/a)``,
``Lambda`` is the generalized companion matrix of ``F0`` and ``a`` its
leading coefficient.  The result lives in the same Newton basis as ``F0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import Matrix, PolyMatrix, det_exact, det_polymatrix, mat_poly_eval
from .companion import companion_matrix
from .errors import (
    BasisError,
    DegreeError,
    DimensionError,
    IndexRangeError,
    NullMatrixError,
    ParameterError,
)
from .poly import NewtonPoly, PowerPoly, newton_to_power, poly_divmod, power_to_newton


@dataclass(frozen=True)
class PolySystem:
    """``F0`` in Newton form over its knots, ``F1..Ft`` in power form."""

    f0: NewtonPoly
    fs: tuple

    def __post_init__(self):
        object.__setattr__(self, "fs", tuple(self.fs))
        if not self.fs:
            raise ParameterError("need at least two polynomials (t >= 1)")
        d0 = len(self.f0.knots)
        if d0 < 1 or not self.f0.coeffs[-1]:
            raise DegreeError("F0 must have degree len(knots) >= 1")
        for i, f in enumerate(self.fs, 1):
            if f.is_zero():
                raise DegreeError(f"F{i} is the zero polynomial")
            if f.degree > d0:
                raise DegreeError(f"deg F{i} = {f.degree} exceeds deg F0 = {d0}")

    @classmethod
    def from_power(cls, polys, knots=None):
        """Build from power-basis polynomials; ``F0`` is re-expressed over ``knots``
        (all zeros by default)."""
        polys = list(polys)
        if len(polys) < 2:
            raise ParameterError("need at least two polynomials (t >= 1)")
        f0 = polys[0]
        d0 = f0.degree
        if not isinstance(d0, int) or d0 < 1:
            raise DegreeError("F0 must have degree >= 1")
        if knots is None:
            knots = (0,) * d0
        if len(knots) != d0:
            raise BasisError(f"need exactly {d0} knots, got {len(knots)}")
        return cls(power_to_newton(f0, knots), tuple(polys[1:]))

    @property
    def t(self):
        return len(self.fs)

    @property
    def d0(self):
        return len(self.f0.knots)

    @property
    def knots(self):
        return self.f0.knots

    @property
    def degrees(self):
        return (self.d0,) + tuple(f.degree for f in self.fs)

    @property
    def lead(self):
        return self.f0.coeffs[-1]

    def power_polys(self):
        return [newton_to_power(self.f0)] + list(self.fs)

    def with_knots(self, knots):
        return PolySystem(power_to_newton(newton_to_power(self.f0), knots), self.fs)


@dataclass(frozen=True)
class DeltaIndex:
    delta: tuple
    delta0: int
    eps: int

    @property
    def size(self):
        return sum(self.delta)

    def is_zero(self):
        return not any(self.delta)


@dataclass(frozen=True)
class SubresultantResult:
    poly: NewtonPoly
    leading: Fraction
    delta: DeltaIndex
    sign: int

    def power(self):
        return newton_to_power(self.poly)


def delta_params(degrees, delta) -> DeltaIndex:
    degrees = tuple(degrees)
    delta = tuple(int(v) for v in delta)
    if len(delta) != len(degrees) - 1:
        raise IndexRangeError(f"delta has {len(delta)} entries, expected {len(degrees) - 1}")
    if any(v < 0 for v in delta):
        raise IndexRangeError("delta entries must be non-negative")
    d0 = degrees[0]
    total = sum(delta)
    if total > d0:
        raise IndexRangeError(f"|delta| = {total} exceeds d0 = {d0}")
    delta0 = max([d + k - d0 for d, k in zip(degrees[1:], delta)] + [1 - total])
    return DeltaIndex(delta, delta0, d0 - total)


def _as_delta(system, delta):
    if isinstance(delta, DeltaIndex):
        return delta
    return delta_params(system.degrees, delta)


@lru_cache(maxsize=512)
def evaluated_companions(system: PolySystem):
    """``Fi(Lambda/a)`` for ``i = 1..t``."""
    comp = companion_matrix(system.f0)
    return tuple(mat_poly_eval(f, comp.normalized) for f in system.fs)


def build_N(system: PolySystem, delta) -> Matrix:
    delta = _as_delta(system, delta)
    if delta.is_zero():
        raise NullMatrixError("delta = (0, ..., 0) gives a matrix with no rows")
    blocks = evaluated_companions(system)
    rows = []
    for r, k in zip(blocks, delta.delta):
        for j in range(k):
            rows.append(r.column(j))
    return Matrix.from_rows(rows, system.d0)


def _detp_columns(n, k, i):
    return [i] + list(range(k + 1, n))


def detp_terms(m: Matrix, k: int):
    """``det(M_i)`` for ``i = 0..k``; ``M_i`` is column ``i+1`` followed by the last
    ``n-k-1`` columns."""
    n = m.cols
    if not 0 <= k < n or m.rows != n - k:
        raise DimensionError(f"detp needs an (n-k) x n matrix with k < n; got {m.shape}, k={k}")
    return [det_exact(m.select_columns(_detp_columns(n, k, i))) for i in range(k + 1)]


def detp(m: Matrix, knots, k: int) -> NewtonPoly:
    """Determinantal polynomial against the Newton basis over ``knots``."""
    if k > len(knots):
        raise BasisError(f"B_{k} needs {k} knots")
    terms = detp_terms(m, k)
    return NewtonPoly(knots, terms + [Fraction(0)] * (len(knots) + 1 - len(terms)))


def detp_family(m: Matrix, family, k: int) -> PowerPoly:
    """Determinantal polynomial against an arbitrary family ``(P_0, .., P_k, ..)``."""
    if len(family) < k + 1:
        raise BasisError(f"family needs at least {k + 1} members")
    out = PowerPoly()
    for c, p in zip(detp_terms(m, k), family):
        if c:
            out = out + p * c
    return out


def build_X(family, n: int) -> PolyMatrix:
    """``k x n`` matrix, row ``s`` holding ``P_s/P_{s-1}`` at column ``s`` and ``-1``
    right after it, with ``k = len(family) - 1``."""
    k = len(family) - 1
    if k > n:
        raise DimensionError(f"{k} rows do not fit {n} columns")
    rows = []
    for s in range(1, k + 1):
        q, r = poly_divmod(family[s], family[s - 1])
        if not r.is_zero():
            raise BasisError(f"P_{s}/P_{s - 1} is not a polynomial")
        row = [PowerPoly()] * n
        row[s - 1] = q
        if s < n:
            row[s] = PowerPoly.constant(-1)
        rows.append(row)
    return PolyMatrix(k, n, [v for r in rows for v in r])


def build_X_newton(knots, eps: int, n: int) -> PolyMatrix:
    """The Newton specialization: ``x - l_s`` on the diagonal, ``-1`` beside it."""
    if eps > len(knots):
        raise BasisError(f"{eps} rows need {eps} knots")
    if eps > n:
        raise DimensionError(f"{eps} rows do not fit {n} columns")
    rows = []
    for s in range(eps):
        row = [PowerPoly()] * n
        row[s] = PowerPoly((-Fraction(knots[s]), 1))
        if s + 1 < n:
            row[s + 1] = PowerPoly.constant(-1)
        rows.append(row)
    return PolyMatrix(eps, n, [v for r in rows for v in r])


def _sign(d0, eps):
    return -1 if (d0 - 1) * eps % 2 else 1


def _null_case(system, delta):
    # no rows in N: S = a^(delta0 - 1) * F0
    a = system.lead
    poly = system.f0.scale(a ** (delta.delta0 - 1))
    return SubresultantResult(poly, poly.coeffs[-1], delta, _sign(system.d0, delta.eps))


def sres(system: PolySystem, delta) -> SubresultantResult:
    delta = _as_delta(system, delta)
    if delta.is_zero():
        return _null_case(system, delta)
    d0, eps = system.d0, delta.eps
    sign = _sign(d0, eps)
    factor = sign * system.lead ** delta.delta0
    terms = detp_terms(build_N(system, delta), eps)
    coeffs = [factor * c for c in terms] + [Fraction(0)] * (d0 - eps)
    return SubresultantResult(NewtonPoly(system.knots, coeffs), coeffs[eps], delta, sign)


def sres_single_det(system: PolySystem, delta) -> SubresultantResult:
    """``a^delta0 * det [N; X]`` with ``X`` the ``eps x d0`` Newton block."""
    delta = _as_delta(system, delta)
    if delta.is_zero():
        return _null_case(system, delta)
    d0, eps = system.d0, delta.eps
    n = build_N(system, delta)
    stacked = PolyMatrix(n.rows, n.cols, n.entries).vstack(build_X_newton(system.knots, eps, d0))
    p = det_polymatrix(stacked, eps) * system.lead ** delta.delta0
    poly = power_to_newton(p, system.knots)
    return SubresultantResult(poly, poly.coeffs[eps], delta, _sign(d0, eps))


def leading_coeff_sres(system: PolySystem, delta) -> Fraction:
    """The ``B_eps`` coefficient of ``S_delta`` from the trailing square block of ``N``."""
    delta = _as_delta(system, delta)
    a = system.lead
    if delta.is_zero():
        return a ** (delta.delta0 - 1) * a
    d0, eps = system.d0, delta.eps
    n = build_N(system, delta)
    det = det_exact(n.select_columns(range(eps, d0)))
    return _sign(d0, eps) * a ** delta.delta0 * det
