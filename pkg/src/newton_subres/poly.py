"""Univariate polynomials over Q in power basis and in Newton basis.

A Newton basis over knots ``(l1, ..., ln)`` is ``B0 = 1``,
``Bi = (x - li) * B(i-1)``.  With all knots zero it is the power basis.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm

from .errors import BasisError

NEG_INF = float("-inf")

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(v):
    return v if type(v) is Fraction else Fraction(v)


class PowerPoly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    The zero polynomial has no coefficients and degree ``-inf``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [_frac(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def from_roots(cls, roots, lead=1):
        p = cls.constant(lead)
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(1 / self.lc)

    def scale(self, c):
        c = _frac(c)
        if not c:
            return PowerPoly()
        return PowerPoly(a * c for a in self.coeffs)

    def __call__(self, r):
        r = _frac(r)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    def __eq__(self, other):
        if isinstance(other, PowerPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == PowerPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("PowerPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return PowerPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, PowerPoly):
            if isinstance(other, (int, Fraction)):
                other = PowerPoly.constant(other)
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PowerPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PowerPoly.constant(other)
        if not isinstance(other, PowerPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, PowerPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PowerPoly()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return PowerPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, PowerPoly):
            if c.degree != 0:
                return NotImplemented
            c = c.coeffs[0]
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        if not c:
            raise ZeroDivisionError("polynomial divided by zero")
        return self.scale(1 / _frac(c))

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative int")
        out = PowerPoly.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __repr__(self):
        return f"PowerPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_power(self)


class NewtonPoly:
    """``sum(coeffs[i] * B_i)`` over a fixed knot vector.

    ``len(coeffs) == len(knots) + 1``.  Leading coefficients may vanish, in
    which case the degree is below ``len(knots)``.  Arithmetic between two
    Newton polynomials requires identical knots.
    """

    __slots__ = ("knots", "coeffs")

    def __init__(self, knots, coeffs):
        self.knots = tuple(_frac(v) for v in knots)
        self.coeffs = tuple(_frac(v) for v in coeffs)
        if len(self.coeffs) != len(self.knots) + 1:
            raise BasisError(
                f"{len(self.coeffs)} coefficients need {len(self.coeffs) - 1} knots, "
                f"got {len(self.knots)}"
            )

    @property
    def degree(self):
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return NEG_INF

    @property
    def lc(self):
        d = self.degree
        return _ZERO if d == NEG_INF else self.coeffs[d]

    def is_zero(self):
        return not any(self.coeffs)

    def _check(self, other):
        if not isinstance(other, NewtonPoly):
            return False
        if other.knots != self.knots:
            raise BasisError("Newton polynomials over different knot vectors")
        return True

    def __eq__(self, other):
        if not isinstance(other, NewtonPoly):
            return NotImplemented
        return self.knots == other.knots and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("NewtonPoly", self.knots, self.coeffs))

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return NewtonPoly(self.knots, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return NewtonPoly(self.knots, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return NewtonPoly(self.knots, (-a for a in self.coeffs))

    def scale(self, c):
        c = _frac(c)
        return NewtonPoly(self.knots, (a * c for a in self.coeffs))

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, r):
        # nested form p0 + (x-l1)(p1 + (x-l2)(p2 + ...))
        r = _frac(r)
        acc = self.coeffs[-1]
        for i in range(len(self.knots) - 1, -1, -1):
            acc = acc * (r - self.knots[i]) + self.coeffs[i]
        return acc

    def to_power(self):
        return newton_to_power(self)

    def __repr__(self):
        return (
            f"NewtonPoly(knots={[str(k) for k in self.knots]}, "
            f"coeffs={[str(c) for c in self.coeffs]})"
        )


def newton_basis(knots, k=None):
    """Power-basis expansions of ``B_0, ..., B_k`` (default ``k = len(knots)``)."""
    knots = tuple(_frac(v) for v in knots)
    if k is None:
        k = len(knots)
    if k > len(knots):
        raise BasisError(f"B_{k} needs {k} knots, got {len(knots)}")
    out = [PowerPoly.constant(1)]
    for i in range(k):
        out.append(out[-1] * PowerPoly((-knots[i], 1)))
    return out


def newton_to_power(p):
    acc = PowerPoly.constant(p.coeffs[-1])
    for i in range(len(p.knots) - 1, -1, -1):
        acc = acc * PowerPoly((-p.knots[i], 1)) + p.coeffs[i]
    return acc


def _synthetic_div(coeffs, r):
    """Divide ``coeffs`` (low to high) by ``x - r``; return (quotient, remainder)."""
    m = len(coeffs) - 1
    if m < 0:
        return [], _ZERO
    if m == 0:
        return [], coeffs[0]
    q = [_ZERO] * m
    q[m - 1] = coeffs[m]
    for k in range(m - 1, 0, -1):
        q[k - 1] = coeffs[k] + r * q[k]
    return q, coeffs[0] + r * q[0]


def power_to_newton(p, knots):
    knots = tuple(_frac(v) for v in knots)
    if p.degree > len(knots):
        raise BasisError(f"degree {p.degree} polynomial needs at least {p.degree} knots")
    q = list(p.coeffs)
    out = []
    for r in knots:
        q, rem = _synthetic_div(q, r)
        out.append(rem)
    out.append(q[0] if q else _ZERO)
    return NewtonPoly(knots, out)


def transition_matrix(knots, n):
    """Unit upper triangular T with ``(B_0..B_{n-1}) = (1, x, .., x^{n-1}) T``."""
    from .algebra import Matrix

    if n - 1 > len(knots):
        raise BasisError(f"order {n} transition matrix needs {n - 1} knots")
    basis = newton_basis(tuple(knots)[: max(n - 1, 0)]) if n else []
    return Matrix(n, n, [basis[j].coeff(i) for i in range(n) for j in range(n)])


def poly_divmod(a, b):
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.degree < b.degree:
        return PowerPoly(), a
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    inv = 1 / b.lc
    q = [_ZERO] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] * inv
        q[k] = c
        if c:
            for j, bj in enumerate(b.coeffs):
                rem[k + j] -= c * bj
    return PowerPoly(q), PowerPoly(rem[:db])


def poly_gcd(a, b):
    """Monic gcd by the Euclidean algorithm; ``gcd(0, 0) = 0``."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def eval_poly(p, r):
    return p(r)


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(p):
    """All rational roots of ``p`` with multiplicity, or None if ``p`` does not split over Q."""
    if p.is_zero():
        raise ValueError("zero polynomial has no finite root list")
    roots = []
    while p.degree > 0 and p.coeffs[0] == 0:
        roots.append(_ZERO)
        p = PowerPoly(p.coeffs[1:])
    while p.degree > 0:
        den = lcm(*(c.denominator for c in p.coeffs))
        ints = [int(c * den) for c in p.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        found = None
        for num in _divisors(ints[0]):
            for dd in _divisors(ints[-1]):
                if gcd(num, dd) != 1:
                    continue
                for cand in (Fraction(num, dd), Fraction(-num, dd)):
                    if p(cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return None
        roots.append(found)
        p = poly_divmod(p, PowerPoly((-found, 1)))[0]
    return sorted(roots)


def _format_term(c, k):
    if k == 0:
        return str(c)
    mono = "x" if k == 1 else f"x^{k}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def format_power(p):
    """Canonical text, highest power first; a negative leading coefficient on a
    multi-term polynomial is pulled out as ``-( ... )``."""
    nz = [(k, c) for k, c in enumerate(p.coeffs) if c]
    if not nz:
        return "0"
    if len(nz) > 1 and p.lc < 0:
        return f"-({format_power(-p)})"
    out = ""
    for k, c in reversed(nz):
        if not out:
            out = _format_term(c, k)
        elif c < 0:
            out += " - " + _format_term(-c, k)
        else:
            out += " + " + _format_term(c, k)
    return out


def format_newton(p):
    terms = [(i, c) for i, c in enumerate(p.coeffs) if c]
    if not terms:
        return "0"
    out = ""
    for i, c in reversed(terms):
        if not out:
            out = f"{c} * B[{i}]"
        elif c < 0:
            out += f" - {-c} * B[{i}]"
        else:
            out += f" + {c} * B[{i}]"
    return out
