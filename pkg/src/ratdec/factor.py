"""Rational y-root recovery from interpolation results.

Roots are found as truncated Maclaurin series (Roth-Ruckenstein descent)
and reconstructed as rational functions by Pade approximation. A root
whose denominator vanishes at x = 0 is reached through the x^shift
substitution Q(x, y/x^shift), and the reciprocal / theta-shift
transforms of the hard-decision case table move every target factor
into Maclaurin range. Every candidate is filtered by exact substitution
back into the source polynomial, so truncation artifacts cannot leak
out of this module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import GF, BiPoly, Poly, RationalFn, Series, binom_odd
from .algebra.gfvec import gfvec

RESULTANT = "resultant"
PAIRWISE = "pairwise"


class NoPadeForm(ValueError):
    """Pade reconstruction forced a denominator vanishing at 0."""


class DegenerateResultant(RuntimeError):
    """Resultant vanished identically; caller should fall back to PAIRWISE."""


@dataclass(frozen=True)
class FactorConfig:
    rho: int                  # a-priori bound on deg(Lambda)
    order: int = 0            # minimum series truncation; 0 = derive from degrees
    method: str = PAIRWISE

    def truncation(self, num_bound: int, den_bound: int) -> int:
        return max(self.order, num_bound + den_bound + 1, 2 * self.rho + 2)


# ---------------------------------------------------------------------------
# Roth-Ruckenstein series roots


def rr_series_roots(q: BiPoly, order: int, max_nodes: int = 4096) -> list[Series]:
    """All y-roots of q as power series at x = 0, truncated to `order`.

    Each descent level fixes one series coefficient from the roots of
    q(0, y) and substitutes y -> x*y + root. The x-content stripped from
    a child is extra vanishing the level earned for free; it is not
    counted against the depth, so every returned series has all `order`
    coefficients pinned (a sparse q can otherwise exhaust a mod-x^order
    budget with most of its tail still undetermined).
    """
    if q.is_zero:
        raise ValueError("zero polynomial has every series as a root")
    field = q.gf
    dense = q.strip_x()[0].to_dense()
    out: list[tuple[int, ...]] = []
    budget = [max_nodes]
    _rr_descend(field, dense, order, (), out, budget)
    seen: set[tuple[int, ...]] = set()
    uniq = []
    for c in out:
        if c not in seen:
            seen.add(c)
            uniq.append(Series(field, list(c), order))
    return uniq


def _rr_descend(field: GF, dense: np.ndarray, levels: int, prefix, out, budget):
    if levels <= 0:
        out.append(prefix)
        return
    if budget[0] <= 0:
        raise RuntimeError("Roth-Ruckenstein branch budget exhausted")
    budget[0] -= 1
    p0 = dense[0, :]
    for gamma in _univariate_roots(field, p0):
        child = _substitute_y_affine(field, dense, gamma)
        content = 0
        while content < child.shape[0] and not child[content, :].any():
            content += 1
        if content >= child.shape[0]:  # q(x, x*y + gamma) == 0 exactly
            out.append(prefix + (gamma,))
            continue
        _rr_descend(field, child[content:, :], levels - 1, prefix + (gamma,), out, budget)


def _univariate_roots(field: GF, coeffs: np.ndarray) -> list[int]:
    """Roots in GF(q) of sum_j coeffs[j] y^j by exhaustive scan."""
    nz = np.nonzero(coeffs)[0]
    if nz.size == 0:
        return []
    cs = [int(c) for c in coeffs]
    roots = []
    if cs[0] == 0:
        roots.append(0)
    mul = field.mul
    for v in range(1, field.q):
        acc = 0
        for c in reversed(cs):
            acc = mul(acc, v) ^ c
        if acc == 0:
            roots.append(v)
    return roots


def _substitute_y_affine(field: GF, dense: np.ndarray, gamma: int) -> np.ndarray:
    """Coefficients of q(x, x*y + gamma)."""
    vec = gfvec(field)
    nx, ny = dense.shape
    w = np.zeros((ny, ny), dtype=np.int64)
    gpow = vec.pow_range(gamma, ny)
    for j in range(ny):
        for r in range(j + 1):
            if binom_odd(j, r):
                w[j, r] = gpow[j - r]
    # mid[i, r] = sum_j dense[i, j] * C(j, r) gamma^(j-r)
    mid = np.bitwise_xor.reduce(
        vec.exp_pad[vec.log[dense][:, :, None] + vec.log[w][None, :, :]], axis=1)
    child = np.zeros((nx + ny, ny), dtype=np.int64)
    for r in range(ny):
        child[r:r + nx, r] = mid[:, r]
    return child


# ---------------------------------------------------------------------------
# Pade reconstruction


def pade(series: Series, deg_num: int, deg_den: int) -> RationalFn:
    """Rational num/den with den(0) != 0 matching the series.

    Partial extended Euclid on (x^N, series) with N = deg_num+deg_den+1;
    stops at the first remainder of degree <= deg_num.
    """
    n_terms = deg_num + deg_den + 1
    if n_terms > series.order:
        raise ValueError("series too short for requested Pade degrees")
    field = series.gf
    r_prev = Poly.monomial(field, 1, n_terms)
    r_cur = series.poly().truncate(n_terms)
    v_prev, v_cur = Poly.zero(field), Poly.one(field)
    while r_cur.degree > deg_num:
        quot, rem = r_prev.divmod(r_cur)
        r_prev, r_cur = r_cur, rem
        v_prev, v_cur = v_cur, v_prev + quot * v_cur
    # the EEA invariant gives r_cur = u*x^N + v_cur*T, so the congruence
    # num = den*T mod x^N holds by construction; only the split can fail
    if v_cur.degree > deg_den or v_cur(0) == 0:
        raise NoPadeForm("no admissible numerator/denominator split")
    return RationalFn(r_cur, v_cur)


# ---------------------------------------------------------------------------
# Shifted rational roots


def shifted_rational_roots(q: BiPoly, cfg: FactorConfig, shift: int,
                           num_bound: int | None = None,
                           den_bound: int | None = None) -> list[RationalFn]:
    """Rational y-roots of q, reachable through the x^shift substitution.

    Bounds are on the unshifted target root's numerator/denominator
    degrees and default to the loose rho-based ones. Only roots that
    substitute back into q exactly as zero are returned.
    """
    if q.is_zero:
        return []
    nb = cfg.rho if num_bound is None else num_bound
    db = cfg.rho if den_bound is None else den_bound
    q_sh = q.shift_y_down_by_xpow(shift)
    order = cfg.truncation(nb + shift, db)
    found: list[RationalFn] = []
    for s in rr_series_roots(q_sh, order):
        try:
            r_hat = pade(s, nb + shift, db)
        except NoPadeForm:
            continue
        root = RationalFn(r_hat.num, r_hat.den * Poly.monomial(q.gf, 1, shift))
        if q.substitute_rational(root).is_zero and root not in found:
            found.append(root)
    return found


# ---------------------------------------------------------------------------
# Hard-decision case table


def hard_transform_roots(q: BiPoly, a_is_lambda: bool, theta,
                         cfg: FactorConfig, num_bound: int, den_bound: int,
                         infinite_theta: bool = False) -> list[RationalFn]:
    """Apply the reciprocal / theta-shift case table, then factor.

    Returns candidates for v/u when a = lambda, and for (u+theta*v)/v
    (u/v at theta = infinity) when b = lambda; in every case the
    denominator of the target is nonzero at 0, so plain Maclaurin
    descent applies to the transformed polynomial. The reciprocal
    transforms drop a zero root of q (its reciprocal is the point at
    infinity), and a zero target root is exactly the v = 0 family where
    y divides q, so that candidate is appended from the y^0-slice test
    rather than recovered through the chain.
    """
    qs = q.strip_x()[0]
    if a_is_lambda and not infinite_theta and theta == 0:
        target = qs
    elif a_is_lambda and not infinite_theta:
        rev = qs.strip_y()[0].reverse_y()
        # the target is u/v at this stage, never zero since u(0) = 1,
        # so the intermediate strip cannot lose it
        target = rev.shift_y(theta).strip_y()[0].strip_x()[0].reverse_y()
    elif a_is_lambda and infinite_theta:
        target = qs.strip_y()[0].reverse_y()
    elif not a_is_lambda and not infinite_theta:
        target = qs.strip_y()[0].reverse_y()
    else:
        target = qs
    roots = shifted_rational_roots(target, cfg, 0, num_bound, den_bound)
    if not qs.is_zero and qs.y_content() > 0:
        zero = RationalFn.zero(q.gf)
        if zero not in roots:
            roots.append(zero)
    return roots


# ---------------------------------------------------------------------------
# Ratio extraction: resultant and pairwise


def sylvester_resultant_y(q1: BiPoly, q2: BiPoly) -> BiPoly:
    """Resultant of q1(x, z*y) and q2(x, y) in y, as a BiPoly in (x, z).

    Computed as the Sylvester determinant over GF(q)[x, z] by a
    division-free bitmask expansion (determinant equals permanent in
    characteristic 2); the banded structure keeps the state space small.
    """
    field = q1.gf
    s1 = q1.y_slices()
    s2 = q2.y_slices()
    d1, d2 = len(s1) - 1, len(s2) - 1
    if d1 < 1 or d2 < 1:
        raise DegenerateResultant("need positive y-degree in both polynomials")
    size = d1 + d2
    # row r < d2: coefficients of q1(x, z*y): slice j carries z^j
    rows: list[list[BiPoly]] = []
    for r in range(d2):
        row = [BiPoly.zero(field) for _ in range(size)]
        for j, p in enumerate(s1):
            if not p.is_zero:
                row[r + d1 - j] = BiPoly(field, {(i, j): v for i, v in enumerate(p.c) if v})
        rows.append(row)
    for r in range(d1):
        row = [BiPoly.zero(field) for _ in range(size)]
        for j, p in enumerate(s2):
            if not p.is_zero:
                row[r + d2 - j] = BiPoly(field, {(i, 0): v for i, v in enumerate(p.c) if v})
        rows.append(row)

    states: dict[int, BiPoly] = {0: BiPoly.one(field)}
    for row in rows:
        nxt: dict[int, BiPoly] = {}
        active = [c for c in range(size) if not row[c].is_zero]
        for mask, acc in states.items():
            for c in active:
                bit = 1 << c
                if mask & bit:
                    continue
                term = acc * row[c]
                if term.is_zero:
                    continue
                key = mask | bit
                nxt[key] = nxt[key] + term if key in nxt else term
        states = {k: v for k, v in nxt.items() if not v.is_zero}
        if not states:
            break
    full = (1 << size) - 1
    det = states.get(full, BiPoly.zero(field))
    if det.is_zero:
        raise DegenerateResultant("resultant vanished identically")
    return det


def resultant_ratio(q1: BiPoly, q2: BiPoly, cfg: FactorConfig, shift: int,
                    num_bound: int | None = None,
                    den_bound: int | None = None) -> list[RationalFn]:
    """Candidate ratios z(x) with q1(x, z*y) and q2(x, y) sharing a y-root."""
    det = sylvester_resultant_y(q1.strip_y()[0].strip_x()[0],
                                q2.strip_y()[0].strip_x()[0])
    return shifted_rational_roots(det, cfg, shift, num_bound, den_bound)


def pairwise_ratio(roots1: list[RationalFn], roots2: list[RationalFn]) -> list[RationalFn]:
    """All quotients r2/r1, canonicalized and deduplicated.

    Division by a zero root is skipped.
    """
    out: list[RationalFn] = []
    for r1 in roots1:
        if r1.is_zero:
            continue
        for r2 in roots2:
            quot = r2 / r1
            if quot not in out:
                out.append(quot)
    return out
