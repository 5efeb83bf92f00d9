"""Sparse bivariate polynomials over GF(2^m).

Monomials x^i y^j are keyed by (i, j); zero coefficients are never
stored. Hasse derivatives rather than ordinary derivatives define
vanishing multiplicity here, and in characteristic 2 the binomial
weights reduce to bitmask tests (Lucas).
"""

from __future__ import annotations

import numpy as np

from .gf import GF
from .poly import MINUS_INFINITY, Poly
from .rational import RationalFn


def binom_odd(n: int, k: int) -> bool:
    """C(n, k) mod 2 via Lucas: odd iff k's bits are a subset of n's."""
    return (n & k) == k


class BiPoly:
    __slots__ = ("gf", "coeffs")

    def __init__(self, field: GF, coeffs=None):
        self.gf = field
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def zero(cls, field: GF) -> "BiPoly":
        return cls(field)

    @classmethod
    def one(cls, field: GF) -> "BiPoly":
        return cls(field, {(0, 0): 1})

    @classmethod
    def from_y_slices(cls, slices) -> "BiPoly":
        """Build from [q_0(x), q_1(x), ...] with q_j the coefficient of y^j."""
        field = slices[0].gf
        coeffs = {}
        for j, p in enumerate(slices):
            for i, v in enumerate(p.c):
                if v:
                    coeffs[(i, j)] = v
        return cls(field, coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def d_y(self):
        """Maximal y-degree with a nonzero coefficient."""
        return max((j for _, j in self.coeffs), default=MINUS_INFINITY)

    @property
    def d_x(self):
        return max((i for i, _ in self.coeffs), default=MINUS_INFINITY)

    def y_slice(self, j: int) -> Poly:
        d = {}
        for (i, jj), v in self.coeffs.items():
            if jj == j:
                d[i] = v
        if not d:
            return Poly.zero(self.gf)
        out = [0] * (max(d) + 1)
        for i, v in d.items():
            out[i] = v
        return Poly(self.gf, out)

    def y_slices(self) -> list[Poly]:
        dy = self.d_y
        if dy is MINUS_INFINITY:
            return []
        return [self.y_slice(j) for j in range(int(dy) + 1)]

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            r = out.get(k, 0) ^ v
            if r:
                out[k] = r
            else:
                out.pop(k, None)
        return BiPoly(self.gf, out)

    __sub__ = __add__

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        gf = self.gf
        log, exp, n = gf.log, gf.exp, gf.n
        out: dict = {}
        for (i1, j1), a in self.coeffs.items():
            la = log[a]
            for (i2, j2), b in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) ^ exp[(la + log[b]) % n]
        return BiPoly(gf, out)

    def scale(self, s: int) -> "BiPoly":
        if s == 0:
            return BiPoly(self.gf)
        if s == 1:
            return self
        gf = self.gf
        return BiPoly(gf, {k: gf.mul(s, v) for k, v in self.coeffs.items()})

    def mul_monomial(self, di: int, dj: int) -> "BiPoly":
        return BiPoly(self.gf, {(i + di, j + dj): v for (i, j), v in self.coeffs.items()})

    def __call__(self, x0: int, y0: int) -> int:
        gf = self.gf
        acc = 0
        for (i, j), v in self.coeffs.items():
            acc ^= gf.mul(v, gf.mul(gf.pow(x0, i), gf.pow(y0, j)))
        return acc

    def hasse_eval(self, dx: int, dy: int, x0: int, y0: int) -> int:
        """Hasse derivative D^(dx,dy) evaluated at (x0, y0)."""
        gf = self.gf
        acc = 0
        for (i, j), v in self.coeffs.items():
            if i >= dx and j >= dy and binom_odd(i, dx) and binom_odd(j, dy):
                acc ^= gf.mul(v, gf.mul(gf.pow(x0, i - dx), gf.pow(y0, j - dy)))
        return acc

    def x_content(self) -> int:
        if self.is_zero:
            return 0
        return min(i for i, _ in self.coeffs)

    def y_content(self) -> int:
        if self.is_zero:
            return 0
        return min(j for _, j in self.coeffs)

    def strip_x(self) -> tuple["BiPoly", int]:
        c = self.x_content()
        if c == 0:
            return self, 0
        return BiPoly(self.gf, {(i - c, j): v for (i, j), v in self.coeffs.items()}), c

    def strip_y(self) -> tuple["BiPoly", int]:
        c = self.y_content()
        if c == 0:
            return self, 0
        return BiPoly(self.gf, {(i, j - c): v for (i, j), v in self.coeffs.items()}), c

    def reverse_y(self) -> "BiPoly":
        """Q(x, 1/y) * y^D_Y(Q): reverses the y-exponents."""
        if self.is_zero:
            return self
        dy = int(self.d_y)
        return BiPoly(self.gf, {(i, dy - j): v for (i, j), v in self.coeffs.items()})

    def shift_y(self, theta: int) -> "BiPoly":
        """Substitute y -> y + theta."""
        if theta == 0 or self.is_zero:
            return self
        gf = self.gf
        out: dict = {}
        tpow = [1]
        dy = int(self.d_y)
        for _ in range(dy):
            tpow.append(gf.mul(tpow[-1], theta))
        for (i, j), v in self.coeffs.items():
            for s in range(j + 1):
                if binom_odd(j, s):
                    k = (i, s)
                    out[k] = out.get(k, 0) ^ gf.mul(v, tpow[j - s])
        return BiPoly(gf, out)

    def shift_y_down_by_xpow(self, s: int) -> "BiPoly":
        """Q(x, y/x^s) * x^(s*D_Y): clears the negative powers."""
        if s == 0 or self.is_zero:
            return self
        dy = int(self.d_y)
        return BiPoly(self.gf, {(i + s * (dy - j), j): v for (i, j), v in self.coeffs.items()})

    def substitute_rational(self, r: RationalFn) -> RationalFn:
        """Q(x, num/den) with denominators cleared: sum_j q_j num^j den^(D_Y-j) over den^D_Y."""
        if self.is_zero:
            return RationalFn.zero(self.gf)
        slices = self.y_slices()
        dy = len(slices) - 1
        num_pow = Poly.one(self.gf)
        den_pows = [Poly.one(self.gf)]
        for _ in range(dy):
            den_pows.append(den_pows[-1] * r.den)
        acc = Poly.zero(self.gf)
        for j, q in enumerate(slices):
            if not q.is_zero:
                acc = acc + q * num_pow * den_pows[dy - j]
            num_pow = num_pow * r.num
        return RationalFn(acc, den_pows[dy]) if not acc.is_zero else RationalFn.zero(self.gf)

    def substitute_poly_mod(self, p: Poly, order: int) -> Poly:
        """Q(x, p(x)) mod x**order; used to audit series roots."""
        acc = Poly.zero(self.gf)
        ypow = Poly.one(self.gf)
        for q in self.y_slices():
            if not q.is_zero:
                acc = (acc + q * ypow).truncate(order)
            ypow = (ypow * p).truncate(order)
        return acc

    def weighted_deg2(self, wx2: int, wy2: int):
        """Doubled (wx, wy)-weighted degree; MINUS_INFINITY for zero."""
        return max((wx2 * i + wy2 * j for i, j in self.coeffs), default=MINUS_INFINITY)

    def to_dense(self, nx: int | None = None, ny: int | None = None) -> np.ndarray:
        dx = 0 if self.is_zero else int(self.d_x)
        dy = 0 if self.is_zero else int(self.d_y)
        nx = nx or dx + 1
        ny = ny or dy + 1
        arr = np.zeros((nx, ny), dtype=np.int64)
        for (i, j), v in self.coeffs.items():
            arr[i, j] = v
        return arr

    @classmethod
    def from_dense(cls, field: GF, arr: np.ndarray) -> "BiPoly":
        nz = np.nonzero(arr)
        return cls(field, {(int(i), int(j)): int(arr[i, j]) for i, j in zip(*nz)})

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        if self.is_zero:
            return "BiPoly(0)"
        terms = sorted(self.coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        body = " + ".join(f"{v}*x^{i}*y^{j}" for (i, j), v in terms)
        return f"BiPoly({body})"
