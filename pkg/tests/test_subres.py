import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from newton_subres.algebra import Matrix, PolyMatrix, det_exact, det_polymatrix
from newton_subres.errors import BasisError, DegreeError, DimensionError, IndexRangeError, NullMatrixError
from newton_subres.oracle import make_planted_instance, random_knots, random_profile, sylvester_subresultant
from newton_subres.poly import NewtonPoly, PowerPoly, newton_basis, newton_to_power
from newton_subres.subres import (
    PolySystem,
    build_N,
    build_X,
    build_X_newton,
    delta_params,
    detp,
    detp_family,
    detp_terms,
    leading_coeff_sres,
    sres,
    sres_single_det,
)

from .conftest import knot_vectors, rationals

X = PowerPoly.x()


@pytest.fixture
def worked():
    return PolySystem.from_power([(X - 1) * (X - 2), X - 1], (1, 2))


def test_delta_params_examples():
    d = delta_params((4, 3, 2), (2, 1))
    assert (d.delta0, d.eps) == (1, 1)
    d = delta_params((2, 1), (1,))
    assert (d.delta0, d.eps) == (0, 1)
    d = delta_params((4, 3, 2), (0, 0))
    assert (d.delta0, d.eps) == (1, 4)


def test_delta0_can_be_negative():
    assert delta_params((4, 1, 1), (1, 1)).delta0 == -1


def test_delta_params_errors():
    with pytest.raises(IndexRangeError):
        delta_params((2, 1), (3,))
    with pytest.raises(IndexRangeError):
        delta_params((2, 1), (1, 1))
    with pytest.raises(IndexRangeError):
        delta_params((2, 1), (-1,))


def test_system_validation():
    with pytest.raises(DegreeError):
        PolySystem.from_power([X, X * X])
    with pytest.raises(DegreeError):
        PolySystem.from_power([X, PowerPoly()])
    with pytest.raises(BasisError):
        PolySystem.from_power([X * X, X], (1,))


def test_build_N_worked(worked):
    assert build_N(worked, (1,)) == Matrix.from_rows([[0, 1]])


def test_build_N_identity_block():
    s = PolySystem.from_power([PowerPoly([2, -1, 3, 1]), PowerPoly.constant(1)], (1, -2, 5))
    assert build_N(s, (3,)) == Matrix.identity(3)


def test_build_N_null(worked):
    with pytest.raises(NullMatrixError):
        build_N(worked, (0,))


def test_detp_worked():
    assert detp(Matrix.from_rows([[0, 1]]), (1, 2), 1) == NewtonPoly((1, 2), (0, 1, 0))


def test_detp_square_case():
    m = Matrix.from_rows([[2, 1], [1, 3]])
    assert detp(m, (7, 8), 0).coeffs == (5, 0, 0)


def test_detp_shape_checks():
    with pytest.raises(DimensionError):
        detp_terms(Matrix.from_rows([[1, 2]]), 0)
    with pytest.raises(DimensionError):
        detp_terms(Matrix(0, 2, []), 2)


def test_detp_column_order():
    m = Matrix.from_rows([[1, 2, 3, 4], [5, 6, 7, 9]])
    # k = 2: M_i = [col i+1, col 4]
    assert detp_terms(m, 2) == [
        det_exact(Matrix.from_rows([[1, 4], [5, 9]])),
        det_exact(Matrix.from_rows([[2, 4], [6, 9]])),
        det_exact(Matrix.from_rows([[3, 4], [7, 9]])),
    ]


def test_build_X_examples():
    lam = (Fraction(3), Fraction(-1))
    assert build_X_newton(lam, 1, 2) == PolyMatrix.from_rows([[X - 3, -1]])
    assert build_X_newton(lam, 0, 2).shape == (0, 2)
    fam = [PowerPoly.constant(1), X, X * X]
    assert build_X(fam, 4) == PolyMatrix.from_rows([[X, -1, 0, 0], [0, X, -1, 0]])


def test_build_X_rejects_non_polynomial_ratio():
    with pytest.raises(BasisError):
        build_X([X, X + 1], 3)


def test_sres_worked(worked):
    res = sres(worked, (1,))
    assert res.power() == -(X - 1)
    assert res.sign == -1
    assert res.leading == -1
    assert res.delta.delta0 == 0 and res.delta.eps == 1


def test_sres_single_det_worked(worked):
    assert sres_single_det(worked, (1,)).power() == -(X - 1)


def test_sres_eps_zero_is_scalar(worked):
    res = sres_single_det(worked, (2,))
    assert res.power().degree <= 0
    assert res.poly == sres(worked, (2,)).poly


def test_leading_coeff_examples(worked):
    assert leading_coeff_sres(worked, (1,)) == -1
    assert leading_coeff_sres(worked, (2,)) == 0
    s = PolySystem.from_power([3 * (X - 1) * (X - 4), X + 5], (2, 2))
    d = delta_params(s.degrees, (0,))
    assert leading_coeff_sres(s, d) == 3 ** (d.delta0 - 1) * 3


def test_null_delta_case():
    a = Fraction(-2)
    f0 = PowerPoly([1, 2, 0, -1, a])
    s = PolySystem.from_power([f0, X ** 3 + 1, X * X - 2], (1, 0, 2, 3))
    res = sres(s, (0, 0))
    assert res.delta.delta0 == 1
    assert res.power() == f0


def _systems(seed, count, max_d0=5):
    rng = random.Random(seed)
    for _ in range(count):
        t = rng.randint(1, 3)
        g, cof = random_profile(rng, t, max_d0)
        rs = make_planted_instance(rng.randrange(10**6), t, g, cof, coprime=rng.random() < 0.5)
        yield rng, rs.base.with_knots(random_knots(rng, rs.base.d0))


def _deltas(s):
    return [d for d in product(range(s.d0 + 1), repeat=s.t) if sum(d) <= s.d0]


def test_coefficients_are_detp_minors():
    for _, s in _systems(11, 15):
        for d in _deltas(s):
            if not any(d):
                continue
            res = sres(s, d)
            eps = res.delta.eps
            assert all(c == 0 for c in res.poly.coeffs[eps + 1:])
            n = build_N(s, d)
            factor = res.sign * s.lead ** res.delta.delta0
            for j in range(eps + 1):
                cols = [j] + list(range(eps + 1, s.d0))
                assert res.poly.coeffs[j] == factor * det_exact(n.select_columns(cols))


def test_leading_coeff_matches_full_result():
    for _, s in _systems(12, 20):
        for d in _deltas(s):
            res = sres(s, d)
            assert leading_coeff_sres(s, d) == res.leading == res.poly.coeffs[res.delta.eps]


def test_single_det_matches_theorem():
    for _, s in _systems(13, 20):
        for d in _deltas(s):
            assert sres_single_det(s, d).poly == sres(s, d).poly


def test_knot_invariance():
    for rng, s in _systems(14, 20):
        other = s.with_knots(random_knots(rng, s.d0))
        for d in _deltas(s):
            assert sres(s, d).power() == sres(other, d).power()


@given(st.data())
def test_detp_single_determinant_identity(data):
    n = data.draw(st.integers(1, 6))
    k = data.draw(st.integers(0, n - 1))
    m = Matrix(n - k, n, data.draw(st.lists(rationals, min_size=(n - k) * n, max_size=(n - k) * n)))
    if data.draw(st.booleans()):
        family = [X ** i for i in range(n + 1)]
    else:
        family = newton_basis(data.draw(knot_vectors(n, n)))
    stacked = PolyMatrix(m.rows, n, m.entries).vstack(build_X(family[: k + 1], n))
    sign = -1 if (n - 1) * k % 2 else 1
    assert detp_family(m, family, k) == det_polymatrix(stacked, k) * sign * family[0]


def test_power_basis_matches_sylvester():
    rng = random.Random(15)
    for _ in range(40):
        d0 = rng.randint(1, 5)
        d1 = rng.randint(0, d0)
        common = PowerPoly.from_roots(rng.sample(range(-4, 5), rng.randint(0, min(d1, 2))))
        a = common * PowerPoly([rng.randint(-3, 3) for _ in range(d0 - common.degree)] + [1])
        b = common * PowerPoly([rng.randint(-3, 3) for _ in range(d1 - common.degree)] + [2])
        s = PolySystem.from_power([a, b])
        for k in range(d1 + 1):
            if k == d1 == d0:
                continue
            ours = sres(s, (d0 - k,)).power()
            ref = sylvester_subresultant(a, b, k)
            assert ours.is_zero() == ref.is_zero()
            if not ours.is_zero():
                assert ours.degree == ref.degree and ours.monic() == ref.monic()
