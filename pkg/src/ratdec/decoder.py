"""End-to-end decoders: unique (Berlekamp), hard list, and soft decision.

The soft pipeline interpolates twice, once per admissible theta, over
the square roots of the p(x, e) targets, recovers the ratio of the two
square-root factors, and reads error locations off the agreement set of
G with h. Every emitted candidate must re-validate to zero syndromes;
the Berlekamp unique-decoding candidate is merged into the soft pool so
the soft decoder never does worse than the baseline it is measured
against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import INFINITY, BiPoly, Poly, RationalFn
from .factor import (PAIRWISE, RESULTANT, DegenerateResultant, FactorConfig,
                     hard_transform_roots, resultant_ratio, shifted_rational_roots)
from .interp import InterpPoint, WeightedOrder, interpolate
from .keysolver import (KeyState, OrderedKeys, ThetaFrame, berlekamp, build_frame,
                        order_keys, point_value, select_thetas)
from .ma import Assignment, PosteriorMatrix, assign
from .rscode import CodeParams, InconsistentErasure, erasure_decode, syndromes

SUCCESS = "SUCCESS"
LIST_EMPTY = "LIST_EMPTY"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


class IndeterminateValue(ArithmeticError):
    """g' - h' vanished at a claimed error location."""


@dataclass(frozen=True)
class Candidate:
    codeword: tuple[int, ...]
    locations: tuple[int, ...]
    values: tuple[int, ...]
    score: float


@dataclass(frozen=True)
class DecodeResult:
    status: str
    candidates: tuple[Candidate, ...] = ()

    @property
    def best(self) -> Candidate | None:
        return self.candidates[0] if self.candidates else None

    def contains(self, codeword) -> bool:
        cw = tuple(codeword)
        return any(c.codeword == cw for c in self.candidates)


@dataclass(frozen=True)
class SoftConfig:
    budget: int = 12
    method: str = PAIRWISE
    rho: int | None = None  # default: n - k
    seed: int = 0

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("budget must be >= 1")
        if self.method not in (PAIRWISE, RESULTANT):
            raise ValueError(f"unknown factorization method {self.method!r}")


# ---------------------------------------------------------------------------
# Unique decoding baseline


def bm_decode(params: CodeParams, received) -> DecodeResult:
    s = syndromes(params, received)
    if s.is_zero:
        clean = Candidate(tuple(received), (), (), 0.0)
        return DecodeResult(SUCCESS, (clean,))
    ks = berlekamp(params.field, s, params.n - params.k)
    cand = _berlekamp_candidate(params, received, ks)
    if cand is None:
        return DecodeResult(LIST_EMPTY)
    return DecodeResult(SUCCESS, (cand,))


def _berlekamp_candidate(params: CodeParams, received, ks: KeyState) -> Candidate | None:
    """Chien scan of lambda plus Forney values from omega; None if invalid."""
    field = params.field
    lam = ks.lam
    if lam.degree != ks.l_lambda:
        return None
    roots = [i for i in range(1, params.n + 1) if lam(params.root_point(i)) == 0]
    if len(roots) != lam.degree:
        return None
    lam_d = lam.derivative()
    values = []
    for i in roots:
        x = params.root_point(i)
        den = field.mul(x, lam_d(x))
        if den == 0:
            return None
        e = field.div(ks.omega(x), den)
        if e == 0:
            return None
        values.append(e)
    word = list(received)
    for i, e in zip(roots, values):
        word[i - 1] ^= e
    if not syndromes(params, word).is_zero:
        return None
    return Candidate(tuple(word), tuple(roots), tuple(values), -float(len(roots)))


# ---------------------------------------------------------------------------
# Error values from a recovered g'


def error_values_from_gprime(params: CodeParams, frame: ThetaFrame,
                             gprime: RationalFn, locations) -> tuple[int, ...]:
    """e_i = phi / (x * (g' + h')) at x = alpha^(-i) (characteristic-2 signs)."""
    field = params.field
    diff = gprime + frame.h_prime
    out = []
    for i in locations:
        x = params.root_point(i)
        d = diff(x)
        if d is INFINITY or d == 0:
            raise IndeterminateValue(f"g' - h' degenerate at position {i}")
        phi = frame.phi(x)
        out.append(field.div(phi, field.mul(x, d)))
    return tuple(out)


# ---------------------------------------------------------------------------
# Hard-decision list decoding


def predict_hard_cap(n: int, r: int, l_a: int, l_b: int, radius: int) -> int:
    """y-degree cap minimizing the predicted premise left side.

    Uses the exact monomial count for the (1, L_a - L_b) order to bound
    the achievable weighted degree at each cap, then minimizes
    D + (radius - L_a) * D_Y over caps.
    """
    c1 = n * r * (r + 1) // 2 + 1
    wy2 = 2 * (l_a - l_b)
    best_cap, best_lhs = 1, None
    cap_hi = 2 * int(math.isqrt(2 * c1)) + 4
    for cap in range(1, cap_hi):
        d2 = _min_wdeg2_for_count(c1, wy2, cap)
        lhs2 = d2 + 2 * (radius - l_a) * cap
        if best_lhs is None or lhs2 < best_lhs:
            best_cap, best_lhs = cap, lhs2
    return best_cap


def _min_wdeg2_for_count(count: int, wy2: int, cap: int) -> int:
    """Smallest doubled weighted degree whose monomial count reaches `count`."""
    lo, hi = -2 * abs(wy2) * cap - 2, 2 * count + 2 * abs(wy2) * cap
    while lo < hi:
        mid = (lo + hi) // 2
        if _count_monomials(mid, wy2, cap) >= count:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _count_monomials(d2: int, wy2: int, cap: int) -> int:
    total = 0
    for j in range(cap + 1):
        rem = d2 - wy2 * j
        if rem >= 0:
            total += rem // 2 + 1
    return total


def hard_list_decode(params: CodeParams, received, radius_target: int, r: int,
                     dy_cap: int | None = None) -> DecodeResult:
    """Rational list decoding up to radius_target with uniform multiplicity r.

    Interpolates the n points (alpha^(-i), h(alpha^(-i))) under the
    (1, L_a - L_b) order, factors through the case table, reconstructs
    Lambda = a u + b v per root, and validates every candidate.
    """
    if r < 1:
        raise ValueError("multiplicity must be >= 1")
    field = params.field
    s = syndromes(params, received)
    if s.is_zero:
        return DecodeResult(SUCCESS, (Candidate(tuple(received), (), (), 0.0),))
    ks = berlekamp(field, s, params.n - params.k)
    keys = order_keys(ks)
    theta1, _ = select_thetas(keys, params)
    frame = build_frame(keys, theta1, field)
    points = [InterpPoint(params.root_point(i), _eval_finite(frame.h, params.root_point(i)), r)
              for i in range(1, params.n + 1)]
    order = WeightedOrder(2, 2 * (keys.l_a - keys.l_b))
    if dy_cap is None:
        dy_cap = predict_hard_cap(params.n, r, keys.l_a, keys.l_b, radius_target)
    result = interpolate(field, points, order, dy_cap)
    q = result.q

    rho = radius_target
    fcfg = FactorConfig(rho=max(rho, keys.l_b), order=0)
    if keys.a_is_lambda:
        nb, db = max(rho - keys.l_b, 0), max(rho - keys.l_a, 0)
    else:
        nb, db = max(rho - keys.l_a, 0), max(rho - keys.l_b, 0)
    roots = hard_transform_roots(q, keys.a_is_lambda, theta1, fcfg, nb, db)

    pool: list[Candidate] = []
    bm_cand = _berlekamp_candidate(params, received, ks)
    if bm_cand is not None:
        _add_candidate(pool, bm_cand)
    for root in roots:
        uv = _root_to_uv(keys, theta1, root)
        if uv is None:
            continue
        u, v = uv
        locator = keys.a * u + keys.b * v
        cand = _candidate_from_locator(params, received, keys, locator, u, v, None)
        if cand is not None:
            _add_candidate(pool, cand)
    return _finish(pool)


def _eval_finite(h: RationalFn, x: int) -> int:
    val = h(x)
    assert val is not INFINITY, "h has a support pole; theta selection is broken"
    return val


def _root_to_uv(keys: OrderedKeys, theta, root: RationalFn):
    """Map a case-table factor root back to the (u, v) pair."""
    num, den = root.num, root.den
    if keys.a_is_lambda:
        u, v = den, num                   # root = v/u
    elif theta is not INFINITY:
        v = den                            # root = (u + theta v)/v
        u = num + den.scale(theta)
    else:
        u, v = num, den                    # root = u/v
    if u.is_zero and v.is_zero:
        return None
    return u, v


def _candidate_from_locator(params: CodeParams, received, keys: OrderedKeys,
                            locator: Poly, u: Poly | None, v: Poly | None,
                            pi: PosteriorMatrix | None) -> Candidate | None:
    """Roots of the locator to positions, then erasure or Forney reconstruction."""
    if locator.is_zero or locator.degree < 1:
        return None
    locs = [i for i in range(1, params.n + 1) if locator(params.root_point(i)) == 0]
    if len(locs) != locator.degree:
        return None
    if len(locs) <= params.n - params.k:
        good = [i for i in range(1, params.n + 1) if i not in locs]
        try:
            word = erasure_decode(params, received, good)
        except InconsistentErasure:
            return None
    else:
        if u is None or v is None:
            return None
        omega = keys.c * u + keys.d * v
        field = params.field
        loc_d = locator.derivative()
        word = list(received)
        for i in locs:
            x = params.root_point(i)
            den = field.mul(x, loc_d(x))
            if den == 0:
                return None
            word[i - 1] ^= field.div(omega(x), den)
    if not syndromes(params, word).is_zero:
        return None
    locs2, vals2 = _pattern_of(received, word)
    return Candidate(tuple(word), locs2, vals2, _score(pi, locs2, vals2))


def _pattern_of(received, word):
    locs, vals = [], []
    for idx, (a, b) in enumerate(zip(received, word)):
        if a != b:
            locs.append(idx + 1)
            vals.append(a ^ b)
    return tuple(locs), tuple(vals)


def _score(pi: PosteriorMatrix | None, locations, values) -> float:
    if pi is None:
        return -float(len(locations))
    total = 0.0
    for i, e in zip(locations, values):
        p = pi.get(i, e)
        if p <= 0.0:
            return float("-inf")
        total += math.log(p)
    return total


def _add_candidate(pool: list[Candidate], cand: Candidate):
    if all(c.codeword != cand.codeword for c in pool):
        pool.append(cand)


def _finish(pool: list[Candidate], status_on_empty: str = LIST_EMPTY) -> DecodeResult:
    if not pool:
        return DecodeResult(status_on_empty)
    ranked = sorted(pool, key=lambda c: (-c.score, len(c.locations), c.codeword))
    return DecodeResult(SUCCESS, tuple(ranked))


# ---------------------------------------------------------------------------
# Soft-decision decoding


@dataclass
class SoftTrace:
    """Intermediate artifacts of one soft decode, for diagnostics and tests."""

    keys: OrderedKeys | None = None
    assignment: Assignment | None = None
    thetas: tuple | None = None
    interpolations: tuple = ()
    flipped: tuple | None = None  # (position, value) when the flipping rule fired
    factor_roots: tuple = ()


def soft_decode(params: CodeParams, pi: PosteriorMatrix, received,
                cfg: SoftConfig | None = None, trace: SoftTrace | None = None) -> DecodeResult:
    """Algebraic soft-decision decoding over GF(2^m).

    Pipeline: Berlekamp keys; greedy multiplicity assignment with the
    single-cell flipping rule; two interpolations at theta1 (finite) and
    theta2 over the square-root targets; rational roots of both with the
    x^(rho - L) pole shift; ratio candidates z = sqrt(g1')/sqrt(g2');
    location set from G against h; erasure reconstruction (or error
    values through g1' when more than n-k locations are claimed); then
    syndrome validation and posterior ranking.
    """
    cfg = cfg or SoftConfig()
    field = params.field
    word = list(received)

    s = syndromes(params, word)
    if s.is_zero:
        return DecodeResult(SUCCESS, (Candidate(tuple(word), (), (), 0.0),))

    ks = berlekamp(field, s, params.n - params.k)
    keys = order_keys(ks)
    asn = assign(pi, cfg.budget, keys)

    if asn.overflow_cells:
        # flip the most probable overflowing cell into the hard decision
        i0, j0 = max(asn.overflow_cells, key=lambda ij: pi.probs[ij[0], ij[1]])
        flip_val = pi.value_of_col(j0)
        word[i0] ^= flip_val
        pi = pi.flipped(i0 + 1, j0)
        if trace is not None:
            trace.flipped = (i0 + 1, flip_val)
        s = syndromes(params, word)
        if s.is_zero:
            return DecodeResult(SUCCESS, (Candidate(tuple(word), (), (), 0.0),))
        ks = berlekamp(field, s, params.n - params.k)
        keys = order_keys(ks)
        asn = assign(pi, cfg.budget, keys)

    pool: list[Candidate] = []
    bm_cand = _berlekamp_candidate(params, word, ks)
    if bm_cand is not None:
        _add_candidate(pool, Candidate(bm_cand.codeword, bm_cand.locations, bm_cand.values,
                                       _score(pi, bm_cand.locations, bm_cand.values)))

    if asn.d_y < 1:
        # one budget-doubling retry before giving up on the soft path
        asn = assign(pi, cfg.budget * 2, keys)
        if asn.d_y < 1:
            res = _finish(pool, status_on_empty=BUDGET_EXCEEDED)
            return res if res.status == BUDGET_EXCEEDED else \
                DecodeResult(BUDGET_EXCEEDED, res.candidates)

    theta1, theta2 = select_thetas(keys, params)
    frame1 = build_frame(keys, theta1, field)
    frame2 = build_frame(keys, theta2, field)
    rho = max(cfg.rho if cfg.rho is not None else params.n - params.k, keys.l_b)
    fcfg = FactorConfig(rho=rho, method=cfg.method)

    q1 = _soft_interpolate(params, frame1, asn)
    q2 = _soft_interpolate(params, frame2, asn)
    if trace is not None:
        trace.keys, trace.assignment = keys, asn
        trace.thetas = (theta1, theta2)
        trace.interpolations = (q1, q2)

    # degree bounds: sqrt(u v' - u' v) over (u + theta v), resp. v at infinity
    nb = max(rho - (keys.l_a + keys.l_b + 2) // 2, 0)
    db1 = max(rho - keys.l_a, 0)
    db2 = db1 if theta2 is not INFINITY else max(rho - keys.l_b, 0)
    shift1 = rho - keys.l_a
    shift2 = shift1 if theta2 is not INFINITY else rho - keys.l_b
    roots1 = shifted_rational_roots(q1.q, fcfg, shift1, nb, db1)
    roots2 = shifted_rational_roots(q2.q, fcfg, shift2, nb, db2)
    if trace is not None:
        trace.factor_roots = (tuple(roots1), tuple(roots2))

    ratio_pairs = _ratio_candidates(cfg, fcfg, keys, theta2, q1.q, q2.q, roots1, roots2)

    h1_vals = [_eval_finite(frame1.h, params.root_point(i)) for i in range(1, params.n + 1)]
    inv_dtheta = None
    if theta2 is not INFINITY:
        inv_dtheta = field.inv(theta1 ^ theta2)

    for z, g1_root in ratio_pairs:
        if theta2 is INFINITY:
            g_fn = z
        else:
            g_fn = z.add_scalar(1).scale(inv_dtheta)
        locs = [i for i in range(1, params.n + 1)
                if g_fn(params.root_point(i)) == h1_vals[i - 1]]
        g1p = g1_root * g1_root if g1_root is not None else None
        _reconstruct(params, word, frame1, locs, g1p, pi, pool)

    if any(r.is_zero for r in roots1) and any(r.is_zero for r in roots2):
        # Degenerate Wronskian: both square-root factors are zero, so the
        # ratio is undefined and g' carries no information. u and v are
        # then both squares (their derivatives vanish), so g1 = w^2 for a
        # rational w of half the degrees that agrees with sqrt(h1) exactly
        # on the error set. Recover w by one more interpolation at the
        # halved bounds with row-mass multiplicities, and sweep constant G
        # candidates as the cheap special case.
        zero_fn = RationalFn.zero(field)
        for c in sorted(set(h1_vals)):
            locs = [i for i in range(1, params.n + 1) if h1_vals[i - 1] == c]
            _reconstruct(params, word, frame1, locs, zero_fn, pi, pool)
        for w_fn in _degenerate_sqrt_roots(params, keys, theta1, asn, h1_vals, rho, fcfg):
            g_fn = w_fn * w_fn
            locs = [i for i in range(1, params.n + 1)
                    if g_fn(params.root_point(i)) == h1_vals[i - 1]]
            _reconstruct(params, word, frame1, locs, zero_fn, pi, pool)

    return _finish(pool)


def _degenerate_sqrt_roots(params: CodeParams, keys: OrderedKeys, theta1,
                           asn: Assignment, h1_vals, rho: int,
                           fcfg: FactorConfig) -> list[RationalFn]:
    """Candidates for w with g1 = w^2 in the zero-Wronskian branch.

    All error hypotheses at one position share the target value
    sqrt(h1_i), so the per-cell multiplicities collapse to row masses,
    and the existence counting carries over with the halved weights.
    """
    field = params.field
    n_hat = max((rho - keys.l_b) // 2, 0)   # deg of v-hat
    d_hat = max((rho - keys.l_a) // 2, 0)   # deg of u-hat + sqrt(theta1) v-hat
    row_mass = asn.m.m.sum(axis=1)
    points = [InterpPoint(params.root_point(i), field.sqrt(h1_vals[i - 1]), int(mass))
              for i, mass in enumerate(row_mass, start=1) if mass > 0]
    if not points:
        return []
    order = WeightedOrder(2, 2 * (n_hat - d_hat))
    qt = interpolate(field, points, order, asn.d_y)
    return shifted_rational_roots(qt.q, fcfg, d_hat, n_hat, d_hat)


def _reconstruct(params: CodeParams, word, frame1: ThetaFrame, locs,
                 g1p: RationalFn | None, pi: PosteriorMatrix | None,
                 pool: list[Candidate]):
    """Erasure or error-value-formula reconstruction for one claimed location set."""
    if not locs:
        return
    if len(locs) <= params.n - params.k:
        good = [i for i in range(1, params.n + 1) if i not in locs]
        try:
            cw = erasure_decode(params, word, good)
        except InconsistentErasure:
            return
    else:
        if g1p is None:
            return
        try:
            vals = error_values_from_gprime(params, frame1, g1p, locs)
        except IndeterminateValue:
            return
        cw = list(word)
        for i, e in zip(locs, vals):
            cw[i - 1] ^= e
        if not syndromes(params, cw).is_zero:
            return
    locs2, vals2 = _pattern_of(word, cw)
    _add_candidate(pool, Candidate(tuple(cw), locs2, vals2, _score(pi, locs2, vals2)))


def _soft_interpolate(params: CodeParams, frame: ThetaFrame, asn: Assignment):
    field = params.field
    la, lb = frame.keys.l_a, frame.keys.l_b
    wy2 = (la - lb - 1) if frame.theta is not INFINITY else (lb - la - 1)
    order = WeightedOrder(2, wy2)
    points = []
    for i, e, mult in asn.m.points():
        x = params.root_point(i)
        points.append(InterpPoint(x, field.sqrt(point_value(frame, x, e)), mult))
    return interpolate(field, points, order, asn.d_y)


def _ratio_candidates(cfg: SoftConfig, fcfg: FactorConfig, keys: OrderedKeys, theta2,
                      q1: BiPoly, q2: BiPoly, roots1, roots2):
    """(z, g1_root) pairs; g1_root is None when z did not come from a Q1 root."""
    pairs = []
    if cfg.method == RESULTANT:
        rho = fcfg.rho
        nb = max(rho - keys.l_a, 0) if theta2 is not INFINITY else max(rho - keys.l_b, 0)
        db = max(rho - keys.l_a, 0)
        try:
            zs = resultant_ratio(q1, q2, fcfg, rho - keys.l_a, nb, db)
            for z in zs:
                g1_root = next((r1 for r1 in roots1 for r2 in roots2
                                if not r2.is_zero and r1 / r2 == z), None)
                pairs.append((z, g1_root))
            return pairs
        except DegenerateResultant:
            pass  # fall back to the pairwise route
    seen = set()
    for r1 in roots1:
        for r2 in roots2:
            if r2.is_zero:
                continue
            z = r1 / r2
            key = (z.num, z.den)
            if key in seen:
                continue
            seen.add(key)
            pairs.append((z, r1))
    return pairs
