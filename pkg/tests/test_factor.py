import random

import pytest

from ratdec.algebra import BiPoly, Poly, RationalFn, Series
from ratdec.factor import (FactorConfig, NoPadeForm, pade, pairwise_ratio,
                           resultant_ratio, rr_series_roots, shifted_rational_roots,
                           sylvester_resultant_y)
from conftest import rand_poly


def linear_in_y(num: Poly, den: Poly) -> BiPoly:
    """den * y - num; its rational root is num/den."""
    return BiPoly.from_y_slices([num, den])


def coprime_pair(field, rng, deg_num, deg_den, den_nonzero_at_0=True):
    while True:
        num = rand_poly(field, rng, deg_num, nonzero=True)
        den = rand_poly(field, rng, deg_den, nonzero=True)
        if den_nonzero_at_0 and den(0) == 0:
            continue
        if num.gcd(den).degree == 0:
            return num, den


class TestSeriesRoots:
    def test_simple_linear(self, gf16):
        q = linear_in_y(Poly(gf16, (1, 1)), Poly.one(gf16))
        roots = rr_series_roots(q, 5)
        assert [r.c for r in roots] == [(1, 1, 0, 0, 0)]

    def test_two_planted_series(self, gf16):
        rng = random.Random(40)
        s1 = rand_poly(gf16, rng, 3)
        s2 = rand_poly(gf16, rng, 3)
        if s1(0) == s2(0):
            s2 = s2 + Poly.one(gf16)
        q = linear_in_y(s1, Poly.one(gf16)) * linear_in_y(s2, Poly.one(gf16))
        roots = {r.c[:4] for r in rr_series_roots(q, 4)}
        assert tuple(s1.coeff(i) for i in range(4)) in roots
        assert tuple(s2.coeff(i) for i in range(4)) in roots

    def test_division_series(self, gf16):
        rng = random.Random(41)
        for _ in range(20):
            v, u = coprime_pair(gf16, rng, 2, 2)
            q = linear_in_y(v, u)
            want = Series.from_rational(RationalFn(v, u), 6)
            roots = rr_series_roots(q, 6)
            assert any(r.c == want.c for r in roots)

    def test_all_series_substitute_to_zero(self, gf16):
        rng = random.Random(42)
        for _ in range(20):
            q = BiPoly(gf16, {(rng.randrange(4), rng.randrange(3)): rng.randrange(1, 16)
                              for _ in range(5)})
            if q.is_zero or q.d_y == 0:
                continue
            order = 5
            for r in rr_series_roots(q, order):
                stripped = q.strip_x()[0]
                assert stripped.substitute_poly_mod(r.poly(), order - 2).truncate(
                    order - 2).is_zero or q.substitute_poly_mod(r.poly(), 2).is_zero


class TestPade:
    def test_geometric(self, gf8):
        s = Series(gf8, (1, 1, 1, 1), 4)
        r = pade(s, 0, 1)
        assert r == RationalFn(Poly.one(gf8), Poly(gf8, (1, 1)))

    def test_planted_rational(self, gf16):
        rng = random.Random(43)
        for _ in range(30):
            num, den = coprime_pair(gf16, rng, 3, 3)
            want = RationalFn(num, den)
            s = Series.from_rational(want, 7)
            assert pade(s, 3, 3) == want

    def test_polynomial_series(self, gf16):
        p = Poly(gf16, (3, 0, 7))
        s = Series.from_poly(p, 5)
        r = pade(s, 4, 0)
        assert r == RationalFn(p, Poly.one(gf16))

    def test_loose_bounds_still_unique(self, gf16):
        rng = random.Random(44)
        for _ in range(20):
            num, den = coprime_pair(gf16, rng, 2, 2)
            want = RationalFn(num, den)
            s = Series.from_rational(want, 11)
            assert pade(s, 5, 5) == want

    def test_too_short_series(self, gf8):
        with pytest.raises(ValueError):
            pade(Series(gf8, (1,), 1), 3, 3)

    def test_no_pade_form_when_denominator_forced_to_zero(self, gf8):
        # the series x admits no num/den with deg num <= 0 and den(0) != 0
        with pytest.raises(NoPadeForm):
            pade(Series(gf8, (0, 1), 2), 0, 1)

    def test_zero_series(self, gf8):
        r = pade(Series(gf8, (0, 0, 0), 3), 1, 1)
        assert r.is_zero


class TestShiftedRoots:
    def test_pole_at_zero(self, gf16):
        q = BiPoly(gf16, {(1, 1): 1, (0, 0): 1})  # x y - 1
        roots = shifted_rational_roots(q, FactorConfig(rho=2), 1, 0, 1)
        assert roots == [RationalFn(Poly.one(gf16), Poly.x(gf16))]

    def test_shift_zero_reduces_to_plain(self, gf16):
        rng = random.Random(45)
        num, den = coprime_pair(gf16, rng, 2, 2)
        q = linear_in_y(num, den)
        roots = shifted_rational_roots(q, FactorConfig(rho=3), 0, 2, 2)
        assert RationalFn(num, den) in roots

    def test_planted_pole_factor(self, gf16):
        # denominator x^2 * w: only reachable through the shift
        rng = random.Random(46)
        for _ in range(10):
            num = rand_poly(gf16, rng, 2, nonzero=True)
            w = rand_poly(gf16, rng, 1, nonzero=True)
            if w(0) == 0 or num(0) == 0:
                continue
            den = Poly.monomial(gf16, 1, 2) * w
            if num.gcd(den).degree > 0:
                continue
            q = linear_in_y(num, den) * BiPoly(gf16, {(0, 1): 3, (1, 0): 1})
            roots = shifted_rational_roots(q, FactorConfig(rho=4), 2, 2, 3)
            assert RationalFn(num, den) in roots

    def test_every_root_substitutes_exactly(self, gf16):
        rng = random.Random(47)
        for _ in range(20):
            num, den = coprime_pair(gf16, rng, 2, 2)
            q = linear_in_y(num, den) * linear_in_y(rand_poly(gf16, rng, 1),
                                                    Poly.one(gf16))
            for r in shifted_rational_roots(q, FactorConfig(rho=3), 1, 3, 3):
                assert q.substitute_rational(r).is_zero


class TestHardTransforms:
    def _keys(self, field, a, b, a_is_lambda):
        from ratdec.keysolver import OrderedKeys
        return OrderedKeys(a=a, b=b, c=Poly.zero(field), d=Poly.one(field),
                           l_a=1, l_b=2, a_is_lambda=a_is_lambda)

    def test_theta_zero_is_identity(self, gf16):
        from ratdec.factor import hard_transform_roots
        rng = random.Random(49)
        v, u = coprime_pair(gf16, rng, 1, 2)
        q = linear_in_y(v, u) * BiPoly(gf16, {(0, 1): 2, (1, 0): 1})
        roots = hard_transform_roots(q, True, 0, FactorConfig(rho=3), 1, 2)
        assert RationalFn(v, u) in roots

    def test_a_lambda_theta_infinity_reverses(self, gf16):
        # Q has root g = u/v; the reversal recovers v/u with u(0) = 1
        from ratdec.factor import hard_transform_roots
        rng = random.Random(50)
        v, u = coprime_pair(gf16, rng, 1, 2)
        q = linear_in_y(u, v)  # v y - u, root u/v
        roots = hard_transform_roots(q, True, None, FactorConfig(rho=3), 1, 2,
                                     infinite_theta=True)
        assert RationalFn(v, u) in roots

    def test_b_lambda_theta_infinity_direct(self, gf16):
        from ratdec.factor import hard_transform_roots
        rng = random.Random(51)
        u, v = coprime_pair(gf16, rng, 2, 1)  # v(0) != 0 here
        q = linear_in_y(u, v)  # root u/v
        roots = hard_transform_roots(q, False, None, FactorConfig(rho=3), 2, 1,
                                     infinite_theta=True)
        assert RationalFn(u, v) in roots

    def test_a_lambda_finite_theta_double_reciprocal(self, gf16):
        from ratdec.factor import hard_transform_roots
        rng = random.Random(52)
        theta = 7
        for _ in range(10):
            v, u = coprime_pair(gf16, rng, 1, 2)
            g_den = u + v.scale(theta)
            if g_den.is_zero:
                continue
            q = linear_in_y(v, g_den)  # root g = v/(u + theta v)
            roots = hard_transform_roots(q, True, theta, FactorConfig(rho=3), 1, 2)
            assert RationalFn(v, u) in roots


class TestResultant:
    def test_linear_case(self, gf16):
        s = RationalFn(Poly(gf16, (1, 1)), Poly.one(gf16))
        z0 = 6
        q1 = linear_in_y(s.num.scale(z0), Poly.one(gf16))
        q2 = linear_in_y(s.num, Poly.one(gf16))
        det = sylvester_resultant_y(q1, q2)
        zs = shifted_rational_roots(det, FactorConfig(rho=2), 0, 1, 1)
        assert RationalFn(Poly(gf16, (z0,)), Poly.one(gf16)) in zs

    def test_planted_ratio(self, gf16):
        rng = random.Random(48)
        tested = 0
        while tested < 10:
            g1n, g1d = coprime_pair(gf16, rng, 2, 2)
            g2d = rand_poly(gf16, rng, 2, nonzero=True)
            if g2d(0) == 0 or g1n.gcd(g2d).degree > 0:
                continue
            r1 = RationalFn(g1n, g1d)
            r2 = RationalFn(g1n, g2d)
            cof = linear_in_y(rand_poly(gf16, rng, 1), Poly(gf16, (1, 3)))
            q1 = linear_in_y(r1.num, r1.den) * cof
            q2 = linear_in_y(r2.num, r2.den) * cof
            z_true = r1 / r2
            det = sylvester_resultant_y(q1, q2)
            # the resultant vanishes at the true ratio
            assert det.substitute_rational(z_true).is_zero
            zs = resultant_ratio(q1, q2, FactorConfig(rho=4), 0, 4, 4)
            assert z_true in zs
            # z-degree of the resultant is bounded by (d_y)^2
            assert det.d_y <= q1.d_y * q2.d_y
            tested += 1

    def test_pairwise_examples(self, gf16):
        s = RationalFn(Poly(gf16, (1, 1)), Poly.one(gf16))
        z0 = 9
        assert pairwise_ratio([s], [s.scale(z0)]) == [RationalFn(Poly(gf16, (z0,)), Poly.one(gf16))]
        same = pairwise_ratio([s, s.scale(2)], [s, s.scale(2)])
        assert RationalFn.one(gf16) in same
        assert pairwise_ratio([RationalFn.zero(gf16)], [s]) == []
