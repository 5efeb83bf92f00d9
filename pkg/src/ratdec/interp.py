"""Weighted-degree-minimal bivariate interpolation with multiplicities.

The core is a Koetter-style incremental basis reduction over dy_cap + 1
candidates indexed by y-degree, processed point by point with all Hasse
constraints of a point evaluated against a y-premixed slice buffer. The
hot loop is a numba kernel over the log/exp tables. Weights are stored
doubled so the half-integer y-weights of the characteristic-2 soft
decoder stay exact, and negative y-weights are allowed. A brute-force
nullspace oracle over the same constraint system provides the
independent check.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np
from numba import njit

from .algebra import GF, BiPoly, binom_odd
from .algebra.gfvec import gfvec


class InfeasibleCap(RuntimeError):
    """Constraint system admits only zero under the y-degree cap."""


class BudgetExceeded(RuntimeError):
    """Oracle ran out of monomials before finding a dependency."""


@dataclass(frozen=True)
class WeightedOrder:
    """Monomial order by doubled (wx, wy)-weighted degree.

    Ties break toward lower y-degree, then lower x-degree; for positive
    wx2 the x-degree is determined by (weight, y-degree), so the key is
    just that pair.
    """

    wx2: int = 2
    wy2: int = 2

    def weight2(self, i: int, j: int) -> int:
        return self.wx2 * i + self.wy2 * j

    def key(self, i: int, j: int) -> tuple[int, int, int]:
        return (self.weight2(i, j), j, i)


@dataclass(frozen=True)
class InterpPoint:
    x: int
    y: int
    mult: int = 1

    def __post_init__(self):
        if self.mult < 1:
            raise ValueError("multiplicity must be >= 1")


@dataclass(frozen=True)
class InterpResult:
    q: BiPoly
    d2: int       # doubled weighted degree of the returned polynomial
    d2_raw: int   # doubled weighted degree of the minimal element before y-stripping
    constraints: int


def constraint_count(points) -> int:
    return sum(p.mult * (p.mult + 1) // 2 for p in points)


def _dedupe(points):
    merged: dict[tuple[int, int], int] = {}
    for p in points:
        key = (p.x, p.y)
        merged[key] = max(merged.get(key, 0), p.mult)
    return [InterpPoint(x, y, m) for (x, y), m in merged.items()]


def hasse_check(q: BiPoly, pt: InterpPoint) -> bool:
    """All Hasse derivatives of total order < mult vanish at the point."""
    for dy in range(pt.mult):
        for dx in range(pt.mult - dy):
            if q.hasse_eval(dx, dy, pt.x, pt.y) != 0:
                return False
    return True


def hasse_table(field: GF, dense: np.ndarray, x0: int, y0: int, m: int) -> np.ndarray:
    """m x m table of Hasse derivative values at (x0, y0), vectorized."""
    vec = gfvec(field)
    nx, ny = dense.shape
    pows_x = vec.pow_range(x0, nx)
    pows_y = vec.pow_range(y0, ny)
    wx = np.zeros((m, nx), dtype=np.int64)
    wy = np.zeros((m, ny), dtype=np.int64)
    for d in range(m):
        for i in range(d, nx):
            if binom_odd(i, d):
                wx[d, i] = pows_x[i - d]
        for j in range(d, ny):
            if binom_odd(j, d):
                wy[d, j] = pows_y[j - d]
    mid = np.bitwise_xor.reduce(
        vec.exp_pad[vec.log[wx][:, :, None] + vec.log[dense][None, :, :]], axis=1)
    return np.bitwise_xor.reduce(
        vec.exp_pad[vec.log[mid][:, :, None] + vec.log[wy.T][None, :, :]], axis=1)


@njit(cache=True)
def _koetter_kernel(xs, ys, mults, ncand, wx2, wy2, log, exp_pad, maxnx):  # pragma: no cover
    g = np.zeros((ncand, maxnx, ncand), dtype=np.int64)
    for j in range(ncand):
        g[j, 0, j] = 1
    lead_x = np.zeros(ncand, dtype=np.int64)
    deg_x = np.zeros(ncand, dtype=np.int64)
    mmax = int(np.max(mults)) if len(mults) else 0
    sl = np.zeros((ncand, maxnx, max(mmax, 1)), dtype=np.int64)
    deltas = np.zeros(ncand, dtype=np.int64)
    n = len(log) - 1  # multiplicative group order q - 1

    for p in range(len(xs)):
        x0, y0, m = xs[p], ys[p], mults[p]
        lx0 = log[x0]
        # powers of y0 up to ncand, of x0 up to maxnx
        ypow = np.empty(ncand, dtype=np.int64)
        v = 1
        for t in range(ncand):
            ypow[t] = v
            v = exp_pad[log[v] + log[y0]]
        xpow = np.empty(maxnx, dtype=np.int64)
        v = 1
        for t in range(maxnx):
            xpow[t] = v
            v = exp_pad[log[v] + lx0]
        # premix the y axis: sl[c, i, dy] = sum_j C(j, dy) y0^(j-dy) g[c, i, j]
        for c in range(ncand):
            for i in range(deg_x[c] + 1):
                for dy in range(m):
                    acc = 0
                    for j in range(dy, ncand):
                        if (j & dy) == dy:
                            cf = g[c, i, j]
                            if cf != 0:
                                acc ^= exp_pad[log[cf] + log[ypow[j - dy]]]
                    sl[c, i, dy] = acc
        for dy in range(m):
            for dx in range(m - dy):
                jstar = -1
                bestw = 0
                for c in range(ncand):
                    acc = 0
                    for i in range(dx, deg_x[c] + 1):
                        if (i & dx) == dx:
                            cf = sl[c, i, dy]
                            if cf != 0:
                                acc ^= exp_pad[log[cf] + log[xpow[i - dx]]]
                    deltas[c] = acc
                    if acc != 0:
                        w = wx2 * lead_x[c] + wy2 * c
                        if jstar < 0 or w < bestw:
                            jstar = c
                            bestw = w
                if jstar < 0:
                    continue
                dinv = exp_pad[n - log[deltas[jstar]]]
                dj = deg_x[jstar]
                for c in range(ncand):
                    if deltas[c] == 0 or c == jstar:
                        continue
                    lf = log[exp_pad[log[deltas[c]] + log[dinv]]]
                    for i in range(dj + 1):
                        for j in range(ncand):
                            cf = g[jstar, i, j]
                            if cf != 0:
                                g[c, i, j] ^= exp_pad[lf + log[cf]]
                        for dd in range(m):
                            cf = sl[jstar, i, dd]
                            if cf != 0:
                                sl[c, i, dd] ^= exp_pad[lf + log[cf]]
                    if dj > deg_x[c]:
                        deg_x[c] = dj
                # g[jstar] *= (x + x0), likewise its slice buffer
                for i in range(dj + 1, -1, -1):
                    for j in range(ncand):
                        cf = g[jstar, i, j]
                        lo = g[jstar, i - 1, j] if i > 0 else 0
                        g[jstar, i, j] = exp_pad[log[cf] + lx0] ^ lo
                    for dd in range(m):
                        cf = sl[jstar, i, dd]
                        lo = sl[jstar, i - 1, dd] if i > 0 else 0
                        sl[jstar, i, dd] = exp_pad[log[cf] + lx0] ^ lo
                deg_x[jstar] = dj + 1
                lead_x[jstar] += 1
    return g, lead_x, deg_x


def interpolate(field: GF, points, order: WeightedOrder, dy_cap: int) -> InterpResult:
    """Order-minimal nonzero polynomial vanishing at every point.

    Vanishing means all Hasse derivatives of total order below the
    point's multiplicity are zero. The result has y-degree at most
    dy_cap and carries no redundant pure-y factor (stripped only while
    that keeps the vanishing property).
    """
    if dy_cap < 0:
        raise InfeasibleCap("negative y-degree cap")
    pts = _dedupe(points)
    cnum = constraint_count(pts)
    vec = gfvec(field)
    ncand = dy_cap + 1
    xs = np.array([p.x for p in pts], dtype=np.int64)
    ys = np.array([p.y for p in pts], dtype=np.int64)
    mults = np.array([p.mult for p in pts], dtype=np.int64)
    maxnx = cnum + 2
    g, lead_x, deg_x = _koetter_kernel(
        xs, ys, mults, ncand, order.wx2, order.wy2, vec.log, vec.exp_pad, maxnx)
    jmin = min(range(ncand), key=lambda j: (order.weight2(int(lead_x[j]), j), j))
    raw = BiPoly.from_dense(field, g[jmin, : int(deg_x[jmin]) + 1, :])
    q = _strip_y(raw, pts)
    return InterpResult(q=q, d2=int(q.weighted_deg2(order.wx2, order.wy2)),
                        d2_raw=int(raw.weighted_deg2(order.wx2, order.wy2)),
                        constraints=cnum)


def _strip_y(q: BiPoly, pts) -> BiPoly:
    """Divide out redundant y factors without breaking any constraint.

    Dividing by y preserves vanishing at points with nonzero y; points
    on y = 0 lose one multiplicity order per division, so those are
    rechecked and the division is rolled back when it would break one.
    """
    zero_y = [p for p in pts if p.y == 0]
    while not q.is_zero and q.y_content() > 0:
        cand = BiPoly(q.gf, {(i, j - 1): v for (i, j), v in q.coeffs.items()})
        if zero_y and not all(hasse_check(cand, p) for p in zero_y):
            break
        q = cand
    return q


def _monomials_in_order(order: WeightedOrder, dy_cap: int):
    """Yield (i, j) pairs sorted by the order key, smallest first."""
    heap = [(order.key(0, j), 0, j) for j in range(dy_cap + 1)]
    heapq.heapify(heap)
    while heap:
        _, i, j = heapq.heappop(heap)
        yield i, j
        heapq.heappush(heap, (order.key(i + 1, j), i + 1, j))


def nullspace_oracle(field: GF, points, order: WeightedOrder, dy_cap: int,
                     monomial_budget: int | None = None) -> InterpResult:
    """Exact minimal solution by Gaussian elimination, for small instances.

    Columns are monomials taken in order; the first column that is a
    linear combination of the previous independent ones yields the
    order-minimal interpolating polynomial. The constraint count plus
    one monomials always suffice.
    """
    pts = _dedupe(points)
    cons = [(p.x, p.y, dx, dy)
            for p in pts for dy in range(p.mult) for dx in range(p.mult - dy)]
    cnum = len(cons)
    budget = monomial_budget if monomial_budget is not None else cnum + 1
    pivots: list[tuple[int, list[int], dict]] = []
    count = 0
    for i, j in _monomials_in_order(order, dy_cap):
        if count >= budget:
            raise BudgetExceeded(f"no dependency within {budget} monomials")
        count += 1
        v = [_constraint_value(field, i, j, c) for c in cons]
        combo = {(i, j): 1}
        for prow, pv, pcombo in pivots:
            if v[prow]:
                f = field.div(v[prow], pv[prow])
                v = [a ^ field.mul(f, b) for a, b in zip(v, pv)]
                for key, val in pcombo.items():
                    r = combo.get(key, 0) ^ field.mul(f, val)
                    if r:
                        combo[key] = r
                    else:
                        combo.pop(key, None)
        prow = next((r for r, a in enumerate(v) if a), None)
        if prow is None:
            raw = BiPoly(field, combo)
            q = _strip_y(raw, pts)
            return InterpResult(q=q, d2=int(q.weighted_deg2(order.wx2, order.wy2)),
                                d2_raw=int(raw.weighted_deg2(order.wx2, order.wy2)),
                                constraints=cnum)
        pivots.append((prow, v, combo))
    raise BudgetExceeded(f"no dependency within {budget} monomials")


def _constraint_value(field: GF, i: int, j: int, con) -> int:
    x0, y0, dx, dy = con
    if i < dx or j < dy or not (binom_odd(i, dx) and binom_odd(j, dy)):
        return 0
    return field.mul(field.pow(x0, i - dx), field.pow(y0, j - dy))
