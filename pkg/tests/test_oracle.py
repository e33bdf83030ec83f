import random
from fractions import Fraction

import pytest

from newton_subres.algebra import det_exact
from newton_subres.errors import ParameterError, SingularOracleError
from newton_subres.gcdsolve import icdeg_direct
from newton_subres.oracle import (
    RootedSystem,
    make_planted_instance,
    random_knots,
    sres_roots_newton,
    sres_roots_power,
    sylvester_subresultant,
    vandermonde_det,
    vandermonde_matrix,
)
from newton_subres.poly import PowerPoly, newton_to_power, poly_gcd
from newton_subres.subres import PolySystem

X = PowerPoly.x()


def _rooted(roots, lead, *fs):
    f0 = PowerPoly.from_roots(roots, lead)
    return RootedSystem(PolySystem.from_power([f0, *fs]), tuple(Fraction(r) for r in roots), Fraction(lead))


def test_vandermonde_examples():
    assert vandermonde_det((1, 2)) == 1
    assert vandermonde_det((1, 2, 4)) == 6
    assert vandermonde_det((3, 1, 3)) == 0


def test_vandermonde_closed_form_matches_det():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 7)
        roots = [Fraction(rng.randint(-20, 20), rng.randint(1, 3)) for _ in range(n)]
        assert vandermonde_det(roots) == det_exact(vandermonde_matrix(roots))


def test_roots_power_examples():
    rs = _rooted((1, 2), 1, X - 1)
    assert sres_roots_power(rs, (1,)) == -(X - 1)
    rs = _rooted((1, 2), 1, X - 3)
    assert sres_roots_power(rs, (2,)) == 2


def test_roots_null_delta_matches_closed_form():
    rs = _rooted((1, -2, 5), 3, X * X + 1, X - 4)
    got = sres_roots_power(rs, (0, 0))
    # delta0 = 1, so a^(delta0 - 1) * F0 = F0
    assert got == newton_to_power(rs.base.f0)


def test_roots_newton_examples():
    rs = _rooted((1, 2), 1, X - 1)
    assert newton_to_power(sres_roots_newton(rs, (1,), (1, 2))) == -(X - 1)
    assert newton_to_power(sres_roots_newton(rs, (1,), (0, 0))) == sres_roots_power(rs, (1,))


def test_roots_oracles_agree_and_are_knot_free():
    rng = random.Random(4)
    for i in range(30):
        rs = make_planted_instance(i, 2, rng.randint(0, 2), (3, rng.randint(0, 3), rng.randint(0, 3)))
        for d in [(1, 0), (0, 1), (1, 1), (2, 1), (3, 0)]:
            ref = sres_roots_power(rs, d)
            for _ in range(2):
                lam = random_knots(rng, rs.base.d0)
                assert newton_to_power(sres_roots_newton(rs, d, lam)) == ref


def test_repeated_roots_rejected():
    rs = make_planted_instance(0, 1, 2, (1, 1), root_mode="repeated")
    assert not rs.has_distinct_roots()
    with pytest.raises(SingularOracleError):
        sres_roots_power(rs, (1,))


def test_planted_instance_shape():
    rs = make_planted_instance(0, 1, 1, (1, 0))
    assert rs.base.degrees == (2, 1)
    assert rs.has_distinct_roots()
    assert newton_to_power(rs.base.f0) == PowerPoly.from_roots(rs.roots, rs.lead)


def test_planted_instance_deterministic():
    a = make_planted_instance(17, 3, 2, (3, 2, 1, 3))
    b = make_planted_instance(17, 3, 2, (3, 2, 1, 3))
    assert a == b


def test_planted_instance_profile():
    for seed in range(40):
        rs = make_planted_instance(seed, 2, seed % 4, (2, 1, 2))
        assert len(set(rs.roots)) == len(rs.roots)
        assert icdeg_direct(rs.base) == (2, 0)
        polys = rs.base.power_polys()
        g = polys[0]
        for f in polys[1:]:
            g = poly_gcd(g, f)
        assert g == rs.gcd


def test_planted_instance_rejects_bad_profile():
    with pytest.raises(ParameterError):
        make_planted_instance(0, 1, 1, (1, 2))
    with pytest.raises(ParameterError):
        make_planted_instance(0, 2, 1, (1, 1))
    with pytest.raises(ParameterError):
        make_planted_instance(0, 1, 1, (0, 0), root_mode="repeated")


def test_sylvester_subresultant_known_values():
    a = X * X - 3 * X + 2
    # order 0 is the Sylvester resultant: Res(x^2-3x+2, x-3) = 2
    assert sylvester_subresultant(a, X - 3, 0) == 2
    assert sylvester_subresultant(a, X - 1, 0) == 0
    # order n < m is lc(B)^(m-n-1) * B
    assert sylvester_subresultant(X ** 3 + 1, 2 * X - 1, 1) == 2 * (2 * X - 1)
