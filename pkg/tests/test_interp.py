import random

import pytest

from ratdec.algebra import BiPoly
from ratdec.interp import (BudgetExceeded, InterpPoint, WeightedOrder, constraint_count,
                           hasse_check, hasse_table, interpolate, nullspace_oracle)


def random_instance(field, rng, max_pts=6, max_mult=2, max_cap=4):
    pts = []
    seen = set()
    for _ in range(rng.randint(1, max_pts)):
        while True:
            x, y = rng.randrange(field.q), rng.randrange(field.q)
            if (x, y) not in seen:
                seen.add((x, y))
                break
        pts.append(InterpPoint(x, y, rng.randint(1, max_mult)))
    cap = rng.randint(1, max_cap)
    order = WeightedOrder(2, rng.randint(-7, 7))
    return pts, order, cap


class TestBasics:
    def test_empty_points(self, gf8):
        res = interpolate(gf8, [], WeightedOrder(2, 2), 3)
        assert res.q == BiPoly.one(gf8)
        assert res.d2 == 0

    def test_negative_cap_rejected(self, gf8):
        from ratdec.interp import InfeasibleCap
        with pytest.raises(InfeasibleCap):
            interpolate(gf8, [], WeightedOrder(2, 2), -1)

    def test_single_point_tie_break(self, gf8):
        # weights (1,1), cap 1: x - x0 wins over y - y0 by lower y-degree
        res = interpolate(gf8, [InterpPoint(3, 5, 1)], WeightedOrder(2, 2), 1)
        assert res.q.coeffs == {(0, 0): 3, (1, 0): 1}

    def test_hasse_check_examples(self, gf8):
        x0 = 4
        q = BiPoly(gf8, {(0, 0): gf8.mul(x0, x0), (2, 0): 1})  # (x - x0)^2
        assert hasse_check(q, InterpPoint(x0, 0, 2))
        q1 = BiPoly(gf8, {(0, 0): x0, (1, 0): 1})  # x - x0
        assert not hasse_check(q1, InterpPoint(x0, 0, 2))

    def test_hasse_table_matches_scalar(self, gf16):
        rng = random.Random(30)
        for _ in range(20):
            q = BiPoly(gf16, {(rng.randrange(5), rng.randrange(4)): rng.randrange(1, 16)
                              for _ in range(6)})
            x0, y0 = rng.randrange(16), rng.randrange(16)
            tab = hasse_table(gf16, q.to_dense(), x0, y0, 3)
            for dx in range(3):
                for dy in range(3):
                    assert tab[dx, dy] == q.hasse_eval(dx, dy, x0, y0)


class TestOracleAgreement:
    def test_random_instances(self, gf8):
        rng = random.Random(31)
        for trial in range(200):
            pts, order, cap = random_instance(gf8, rng)
            ri = interpolate(gf8, pts, order, cap)
            ro = nullspace_oracle(gf8, pts, order, cap)
            assert ri.d2 == ro.d2, f"instance {trial}"
            assert not ri.q.is_zero
            dy = ri.q.d_y
            assert dy == float("-inf") or dy <= cap
            for p in pts:
                assert hasse_check(ri.q, p), f"instance {trial}"
                assert hasse_check(ro.q, p), f"instance {trial}"

    def test_outputs_equal_up_to_scalar(self, gf8):
        # the order-minimal module element is unique up to scaling
        rng = random.Random(32)
        for _ in range(50):
            pts, order, cap = random_instance(gf8, rng, max_pts=4)
            qi = interpolate(gf8, pts, order, cap).q
            qo = nullspace_oracle(gf8, pts, order, cap).q
            lead = min(qi.coeffs)
            ci = qi.coeffs[lead]
            co = qo.coeffs.get(lead)
            assert co is not None
            assert qi.scale(gf8.inv(ci)) == qo.scale(gf8.inv(co))

    def test_budget_is_constraint_count_plus_one(self, gf8):
        rng = random.Random(33)
        for _ in range(30):
            pts, order, cap = random_instance(gf8, rng)
            c = constraint_count(pts)
            res = nullspace_oracle(gf8, pts, order, cap, monomial_budget=c + 1)
            assert not res.q.is_zero
        with pytest.raises(BudgetExceeded):
            nullspace_oracle(gf8, [InterpPoint(1, 1, 2)], WeightedOrder(2, 2), 2,
                             monomial_budget=1)


class TestProperties:
    def test_monotonicity_adding_points(self, gf8):
        # the raw minimal weighted degree; y-stripping is a post-process
        rng = random.Random(34)
        for _ in range(40):
            pts, order, cap = random_instance(gf8, rng, max_pts=4)
            d_before = interpolate(gf8, pts, order, cap).d2_raw
            while True:
                x, y = rng.randrange(8), rng.randrange(8)
                if all((p.x, p.y) != (x, y) for p in pts):
                    break
            d_after = interpolate(gf8, pts + [InterpPoint(x, y, 1)], order, cap).d2_raw
            assert d_after >= d_before

    def test_no_redundant_y_factor_without_zero_points(self, gf8):
        rng = random.Random(35)
        for _ in range(40):
            pts, order, cap = random_instance(gf8, rng)
            if any(p.y == 0 for p in pts):
                continue
            q = interpolate(gf8, pts, order, cap).q
            assert q.y_content() == 0

    def test_strip_rollback_preserves_vanishing_on_zero_y(self, gf8):
        # y-coordinate 0 points force the strip to keep multiplicities intact
        pts = [InterpPoint(x, 0, 2) for x in (1, 2, 3)]
        res = interpolate(gf8, pts, WeightedOrder(2, -2), 4)
        for p in pts:
            assert hasse_check(res.q, p)

    def test_oracle_agreement_mult3(self, gf16):
        rng = random.Random(37)
        for _ in range(40):
            pts, order, cap = random_instance(gf16, rng, max_pts=3, max_mult=3, max_cap=3)
            ri = interpolate(gf16, pts, order, cap)
            ro = nullspace_oracle(gf16, pts, order, cap)
            assert ri.d2 == ro.d2
            assert all(hasse_check(ri.q, p) for p in pts)

    def test_big_multiplicity_instance(self, gf16):
        # the hard-decoding configuration: 15 points, multiplicity 12
        rng = random.Random(36)
        pts = [InterpPoint(gf16.alpha_pow(-i), rng.randrange(16), 12) for i in range(1, 16)]
        res = interpolate(gf16, pts, WeightedOrder(2, -2), 47)
        assert res.constraints == 1170
        for p in pts:
            assert hasse_check(res.q, p)
