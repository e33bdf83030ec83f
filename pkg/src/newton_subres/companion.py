"""Generalized companion matrices of Newton-basis polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Matrix, mat_poly_eval
from .errors import DegreeError
from .poly import NewtonPoly, PowerPoly, newton_basis, power_to_newton


@dataclass(frozen=True)
class CompanionMatrix:
    """``Lambda = scale * normalized`` where ``scale`` is the leading Newton coefficient.

    ``normalized`` has the knots on the diagonal (the last one shifted by
    ``-p_{n-1}/p_n``), ones on the subdiagonal and ``-p_i/p_n`` down the last column.
    """

    scale: Fraction
    normalized: Matrix
    knots: tuple

    @property
    def matrix(self):
        return self.normalized.scale(self.scale)

    @property
    def order(self):
        return self.normalized.rows


def companion_matrix(p: NewtonPoly) -> CompanionMatrix:
    n = len(p.knots)
    if n < 1:
        raise DegreeError("companion matrix of a constant polynomial")
    pn = p.coeffs[n]
    if not pn:
        raise DegreeError(f"leading Newton coefficient p_{n} is zero")
    lam = p.knots
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i][i] = lam[i]
        rows[i + 1][i] = Fraction(1)
        rows[i][n - 1] = -p.coeffs[i] / pn
    rows[n - 1][n - 1] = lam[n - 1] - p.coeffs[n - 1] / pn
    return CompanionMatrix(pn, Matrix.from_rows(rows), lam)


def _row_times(basis, m):
    """Row vector ``basis * m`` with polynomial entries."""
    out = []
    for j in range(m.cols):
        acc = PowerPoly()
        for i, b in enumerate(basis):
            c = m[i, j]
            if c:
                acc = acc + b * c
        out.append(acc)
    return out


def shift_defect(p: NewtonPoly):
    """Entries of ``p_n * x * Bt - Bt * Lambda`` with ``Bt = (B_0, .., B_{n-1})``.

    Exactly ``(0, ..., 0, P)`` in power basis.
    """
    comp = companion_matrix(p)
    n = comp.order
    basis = newton_basis(p.knots, n - 1)
    left = [b * PowerPoly((0, comp.scale)) for b in basis]
    right = _row_times(basis, comp.matrix)
    return [a - b for a, b in zip(left, right)]


def modular_defect(p: NewtonPoly, q: PowerPoly):
    """Entries of ``Bt * q(Lambda/p_n) - q * Bt``; each one is a multiple of ``P``."""
    comp = companion_matrix(p)
    n = comp.order
    basis = newton_basis(p.knots, n - 1)
    evaluated = mat_poly_eval(q, comp.normalized)
    return [a - q * b for a, b in zip(_row_times(basis, evaluated), basis)]


def power_companion(p: PowerPoly) -> CompanionMatrix:
    """Companion matrix over the all-zero knot vector."""
    n = p.degree
    if not isinstance(n, int) or n < 1:
        raise DegreeError("companion matrix of a constant polynomial")
    return companion_matrix(power_to_newton(p, (0,) * n))


__all__ = [
    "CompanionMatrix",
    "companion_matrix",
    "modular_defect",
    "power_companion",
    "shift_defect",
]
