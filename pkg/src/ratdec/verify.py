"""Planted-instance verification suites behind `ratdec verify`.

These are the independent oracles: the Wu decomposition of a known
locator is solved by linear algebra (never at decode time), the true
square-root factor is built from it, and the decoder's interpolation
and factorization artifacts are checked symbolically against it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .algebra import INFINITY, GF, Poly, RationalFn, gf
from .decoder import SoftConfig, SoftTrace, hard_list_decode, soft_decode
from .interp import InterpPoint, WeightedOrder, hasse_check, interpolate, nullspace_oracle
from .keysolver import OrderedKeys, berlekamp, order_keys
from .ma import PosteriorMatrix, assign, soft_premise
from .rscode import CodeParams, ErrorPattern, apply_pattern, encode, rs_code, syndromes


@dataclass
class SuiteReport:
    name: str
    passed: int = 0
    failed: int = 0
    details: list[str] = field(default_factory=list)

    def check(self, ok: bool, message: str):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.details.append(message)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def wu_decompose(field_: GF, keys: OrderedKeys, locator: Poly) -> tuple[Poly, Poly]:
    """Solve locator = a*u + b*v for the unique in-bounds (u, v).

    Unknown coefficient counts follow deg(u) <= deg - L_a and
    deg(v) <= deg - L_b; the overdetermined system is consistent for
    any locator the key pair can express.
    """
    deg = int(locator.degree)
    du, dv = deg - keys.l_a, deg - keys.l_b
    cols = [keys.a.shift(s) for s in range(max(du, -1) + 1)]
    cols += [keys.b.shift(s) for s in range(max(dv, -1) + 1)]
    nu = max(du, -1) + 1
    maxd = max([int(c.degree) for c in cols if not c.is_zero] + [deg])
    aug = [[c.coeff(r) for c in cols] + [locator.coeff(r)] for r in range(maxd + 1)]
    ncols = len(cols)
    r0 = 0
    where = {}
    for c in range(ncols):
        piv = next((r for r in range(r0, len(aug)) if aug[r][c]), None)
        if piv is None:
            continue
        aug[r0], aug[piv] = aug[piv], aug[r0]
        inv = field_.inv(aug[r0][c])
        aug[r0] = [field_.mul(inv, v) for v in aug[r0]]
        for r in range(len(aug)):
            if r != r0 and aug[r][c]:
                f = aug[r][c]
                aug[r] = [a ^ field_.mul(f, b) for a, b in zip(aug[r], aug[r0])]
        where[c] = r0
        r0 += 1
    sol = [aug[where[c]][ncols] if c in where else 0 for c in range(ncols)]
    for r in range(r0, len(aug)):
        if aug[r][ncols]:
            raise ValueError("locator is not expressible over the key pair")
    u = Poly(field_, sol[:nu])
    v = Poly(field_, sol[nu:])
    if not (keys.a * u + keys.b * v == locator):
        raise ValueError("decomposition did not reproduce the locator")
    return u, v


def true_sqrt_gprime(u: Poly, v: Poly, theta) -> RationalFn:
    """sqrt(g') from the ground truth: sqrt(u v' - u' v) over u + theta v."""
    wron = u * v.derivative() + u.derivative() * v
    num = wron.sqrt()
    den = v if theta is INFINITY else u + v.scale(theta)
    return RationalFn(num, den)


def planted_instance(params: CodeParams, rng: random.Random, weight: int):
    """Random codeword plus a random weight-w error pattern."""
    msg = [rng.randrange(params.field.q) for _ in range(params.k)]
    cw = encode(params, msg)
    locs = tuple(sorted(rng.sample(range(1, params.n + 1), weight)))
    vals = tuple(rng.randrange(1, params.field.q) for _ in range(weight))
    pat = ErrorPattern(locs, vals)
    return cw, pat, apply_pattern(params, cw, pat)


def concentrated_pi(params: CodeParams, pat: ErrorPattern, mass: float = 0.95) -> PosteriorMatrix:
    """Posteriors with `mass` on the true error cells (hard cell elsewhere)."""
    n = params.n
    probs = np.zeros((n, n))
    hard = np.zeros(n)
    ref = PosteriorMatrix(params, probs.copy(), hard.copy())
    rest = 1.0 - mass
    for i in range(1, n + 1):
        if i in pat.locations:
            e = pat.values[pat.locations.index(i)]
            probs[i - 1, :] = rest * 0.2 / (n - 1)
            probs[i - 1, ref.col_of_value(e)] = mass
            hard[i - 1] = rest * 0.8
        else:
            hard[i - 1] = mass
            probs[i - 1, :] = rest / n
    return PosteriorMatrix(params, probs, hard)


def premise_budget(params: CodeParams, pi: PosteriorMatrix, keys: OrderedKeys,
                   pat: ErrorPattern, sweep=(4, 6, 8, 12, 16, 24, 32)) -> int | None:
    """Smallest swept budget whose assignment satisfies the soft premise."""
    for b in sweep:
        asn = assign(pi, b, keys)
        if asn.d_y >= 1 and soft_premise(asn.m, asn.c, asn.d_y, keys,
                                         pat.locations, pat.values):
            return b
    return None


# ---------------------------------------------------------------------------
# Suites


def run_algebra_suite(seed: int = 0, pairs: int = 100_000) -> SuiteReport:
    from .algebra import clmul_reduce

    rep = SuiteReport("algebra")
    for m in (3, 4):
        f = gf(m)
        q = f.q
        ok = True
        for a in range(q):
            for b in range(q):
                if f.mul(a, b) != clmul_reduce(a, b, f.prim_poly):
                    ok = False
                for c in range(q):
                    if f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)):
                        ok = False
                    if f.mul(a, b ^ c) != (f.mul(a, b) ^ f.mul(a, c)):
                        ok = False
        for a in range(1, q):
            if f.mul(a, f.inv(a)) != 1:
                ok = False
            if f.mul(f.sqrt(a), f.sqrt(a)) != a:
                ok = False
        rep.check(ok, f"field axioms failed in GF(2^{m})")
    f = gf(8)
    rng = random.Random(seed)
    ok = all(
        f.mul(a, b) == clmul_reduce(a, b, f.prim_poly)
        for a, b in ((rng.randrange(256), rng.randrange(256)) for _ in range(pairs))
    )
    rep.check(ok, "table multiplication disagrees with the carry-less oracle")
    return rep


def run_interp_suite(seed: int = 0, instances: int = 200) -> SuiteReport:
    rep = SuiteReport("interp")
    f = gf(3)
    rng = random.Random(seed)
    for trial in range(instances):
        pts = []
        seen = set()
        for _ in range(rng.randint(1, 6)):
            while True:
                x, y = rng.randrange(8), rng.randrange(8)
                if (x, y) not in seen:
                    seen.add((x, y))
                    break
            pts.append(InterpPoint(x, y, rng.randint(1, 2)))
        cap = rng.randint(1, 4)
        order = WeightedOrder(2, rng.randint(-7, 7))
        ri = interpolate(f, pts, order, cap)
        ro = nullspace_oracle(f, pts, order, cap)
        rep.check(ri.d2 == ro.d2, f"weighted degree mismatch on instance {trial}")
        rep.check(all(hasse_check(ri.q, p) for p in pts),
                  f"vanishing failed on instance {trial}")
    return rep


def run_planted_hard_suite(seed: int = 0, instances: int = 50) -> SuiteReport:
    rep = SuiteReport("planted-hard")
    params = rs_code(4, 9)
    rng = random.Random(seed)
    for trial in range(instances):
        cw, pat, rx = planted_instance(params, rng, params.t + 1)
        res = hard_list_decode(params, rx, radius_target=params.t + 1, r=12)
        rep.check(res.contains(cw), f"instance {trial} missed the codeword")
    return rep


def run_planted_soft_suite(seed: int = 0, instances: int = 50) -> SuiteReport:
    rep = SuiteReport("planted-soft")
    params = rs_code(4, 9)
    f = params.field
    rng = random.Random(seed)
    for trial in range(instances):
        cw, pat, rx = planted_instance(params, rng, params.t + 1)
        pi = concentrated_pi(params, pat)
        ks = berlekamp(f, syndromes(params, rx), params.n - params.k)
        keys = order_keys(ks)
        budget = premise_budget(params, pi, keys, pat)
        if budget is None:
            rep.check(False, f"instance {trial}: no premise-satisfying budget")
            continue
        trace = SoftTrace()
        res = soft_decode(params, pi, rx, SoftConfig(budget=budget), trace=trace)
        rep.check(res.contains(cw), f"instance {trial} missed the codeword")
        # vanishing oracle: the true square-root factor annihilates both
        # interpolation results whenever the degree inequality for that theta holds
        u, v = wu_decompose(f, keys, pat.locator(params))
        for which, (theta, qres) in enumerate(zip(trace.thetas, trace.interpolations)):
            sg = true_sqrt_gprime(u, v, theta)
            if _vanishing_premise_holds(qres, keys, theta, pat, trace):
                rep.check(qres.q.substitute_rational(sg).is_zero,
                          f"instance {trial}: substitution not zero for theta index {which}")
    return rep


def _vanishing_premise_holds(qres, keys: OrderedKeys, theta, pat: ErrorPattern, trace: SoftTrace) -> bool:
    la, lb = keys.l_a, keys.l_b
    wy2 = (la - lb - 1) if theta is not INFINITY else (lb - la - 1)
    d2 = qres.q.weighted_deg2(2, wy2)
    lref = la if theta is not INFINITY else lb
    mult_sum = sum(trace.assignment.m.get(i, e)
                   for i, e in zip(pat.locations, pat.values))
    dy = qres.q.d_y
    dy = 0 if dy == float("-inf") else int(dy)
    return d2 + 2 * (pat.weight - lref) * dy < 2 * mult_sum


SUITES = {
    "algebra": run_algebra_suite,
    "interp": run_interp_suite,
    "planted-hard": run_planted_hard_suite,
    "planted-soft": run_planted_soft_suite,
}
