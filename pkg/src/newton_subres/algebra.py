"""Dense exact matrices over Q and over Q[x], and their determinants."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import kernels
from .errors import DimensionError
from .poly import NewtonPoly, PowerPoly, newton_to_power

Rational = Fraction


def _frac(v):
    return v if type(v) is Fraction else Fraction(v)


class Matrix:
    """Immutable ``rows x cols`` matrix of rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(self._coerce(v) for v in entries)
        if len(entries) != rows * cols:
            raise DimensionError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @staticmethod
    def _coerce(v):
        return _frac(v)

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        return cls(len(rows), cols, [v for r in rows for v in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return type(self)(self.cols, self.rows,
                          [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def select_columns(self, idx):
        idx = list(idx)
        return type(self)(self.rows, len(idx), [self[i, j] for i in range(self.rows) for j in idx])

    def vstack(self, other):
        if self.cols != other.cols:
            raise DimensionError(f"cannot stack {self.shape} over {other.shape}")
        return type(self)(self.rows + other.rows, self.cols, self.entries + other.entries)

    def scale(self, c):
        return type(self)(self.rows, self.cols, [v * c for v in self.entries])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        prod = kernels.matmul(self.tolist(), other.tolist())
        return type(self)(self.rows, other.cols, [v for r in prod for v in r])

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return type(self)(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {other.shape} from {self.shape}")
        return type(self)(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"{type(self).__name__}({self.rows}x{self.cols}, {[[str(v) for v in r] for r in self.tolist()]})"


ScalarMatrix = Matrix


class PolyMatrix(Matrix):
    """Matrix with ``PowerPoly`` entries."""

    __slots__ = ()

    @staticmethod
    def _coerce(v):
        return v if isinstance(v, PowerPoly) else PowerPoly.constant(v)

    def evaluate(self, r):
        return Matrix(self.rows, self.cols, [p(r) for p in self.entries])

    def scale(self, c):
        return PolyMatrix(self.rows, self.cols, [p * c for p in self.entries])

    @property
    def max_degree(self):
        return max((p.degree for p in self.entries), default=float("-inf"))


def _require_square(m):
    if m.rows != m.cols:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")


def det_exact(m):
    """Exact determinant: rows are scaled to integers, the integer matrix goes
    through Bareiss elimination, and the row scalings are divided back out."""
    _require_square(m)
    n = m.rows
    if n == 0:
        return Fraction(1)
    rows = []
    scale = 1
    for i in range(n):
        r = m.row(i)
        den = lcm(*(v.denominator for v in r))
        scale *= den
        rows.append([v.numerator * (den // v.denominator) for v in r])
    return Fraction(kernels.bareiss_det(rows), scale)


def interpolation_points(count):
    """``0, 1, -1, 2, -2, ...`` (first ``count`` of them)."""
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return [Fraction(p) for p in pts[:count]]


def interpolate(points, values):
    """Power-basis polynomial through ``(points[i], values[i])`` via divided differences."""
    points = [_frac(p) for p in points]
    table = [_frac(v) for v in values]
    n = len(points)
    coeffs = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (points[i + level] - points[i])
                 for i in range(n - level)]
        coeffs.append(table[0])
    if not coeffs:
        return PowerPoly()
    return newton_to_power(NewtonPoly(points[:n - 1], coeffs))


def det_polymatrix(m, degree_bound):
    """Determinant of a polynomial matrix whose determinant has degree <= ``degree_bound``,
    by evaluation at ``degree_bound + 1`` integer points and interpolation."""
    _require_square(m)
    if m.rows == 0:
        return PowerPoly.constant(1)
    pts = interpolation_points(degree_bound + 1)
    return interpolate(pts, [det_exact(m.evaluate(p)) for p in pts])


def mat_poly_eval(q, m):
    """``q(M) = q_m M^m + ... + q_1 M + q_0 I`` by Horner's scheme."""
    _require_square(m)
    n = m.rows
    if q.is_zero():
        return Matrix.zeros(n, n)
    base = m.tolist()
    coeffs = q.coeffs
    acc = [[coeffs[-1] if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for c in reversed(coeffs[:-1]):
        acc = kernels.matmul(acc, base)
        if c:
            for i in range(n):
                acc[i][i] += c
    return Matrix(n, n, [v for r in acc for v in r])
