"""Seeded oracle-equivalence checks behind ``newton-subres selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .gcdsolve import gcd_via_sres, icdeg_direct
from .oracle import make_planted_instance, random_knots, random_profile, sres_roots_newton, sres_roots_power
from .poly import newton_to_power, poly_divmod, power_to_newton
from .subres import sres, sres_single_det


@dataclass
class CheckTally:
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok, label):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(label)


def admissible_deltas(t, d0):
    return [d for d in product(range(d0 + 1), repeat=t) if sum(d) <= d0]


def run_selftest(seed=0, instances=60):
    rng = random.Random(seed)
    tally = CheckTally()
    for idx in range(instances):
        t = rng.randint(1, 3)
        g, cof = random_profile(rng, t)
        inst_seed = rng.randrange(2**32)
        rs = make_planted_instance(inst_seed, t, g, cof, coprime=rng.random() < 0.5)
        lam = random_knots(rng, rs.base.d0)
        lam2 = random_knots(rng, rs.base.d0)
        system = rs.base.with_knots(lam)
        other = rs.base.with_knots(lam2)
        for d in admissible_deltas(t, system.d0):
            label = f"instance {idx} delta {d}"
            got = sres(system, d)
            oracle = sres_roots_power(rs, d)
            tally.record(got.poly == power_to_newton(oracle, lam), label + ": theorem vs roots")
            tally.record(sres_single_det(system, d).poly == got.poly, label + ": single determinant")
            tally.record(sres_roots_newton(rs, d, lam) == got.poly, label + ": newton roots")
            tally.record(newton_to_power(sres(other, d).poly) == got.power(), label + ": knot invariance")
        report = gcd_via_sres(system)
        gpoly = newton_to_power(report.gcd_poly)
        ok = report.icdeg == icdeg_direct(system) and all(
            poly_divmod(f, gpoly)[1].is_zero() for f in system.power_polys()
        )
        tally.record(ok, f"instance {idx}: gcd recovery")
    return tally
