"""Univariate polynomials over GF(2^m).

Coefficients are stored lowest degree first with no trailing zeros. The
degree of the zero polynomial is the sentinel MINUS_INFINITY rather than
-1, so weighted-degree arithmetic never silently goes wrong.
"""

from __future__ import annotations

from .gf import GF

MINUS_INFINITY = float("-inf")


class NotASquare(ValueError):
    """Raised by poly_sqrt on input with a nonzero odd-degree coefficient."""


class Poly:
    __slots__ = ("gf", "c")

    def __init__(self, field: GF, coeffs=()):
        self.gf = field
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def zero(cls, field: GF) -> "Poly":
        return cls(field)

    @classmethod
    def one(cls, field: GF) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: GF) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: GF, coeff: int, deg: int) -> "Poly":
        return cls(field, (0,) * deg + (coeff,)) if coeff else cls(field)

    @property
    def degree(self):
        return len(self.c) - 1 if self.c else MINUS_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.c

    def coeff(self, i: int) -> int:
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] ^= v
        return Poly(self.gf, out)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.c or not other.c:
            return Poly(self.gf)
        gf = self.gf
        log, exp, n = gf.log, gf.exp, gf.n
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            la = log[a]
            for j, b in enumerate(other.c):
                if b:
                    out[i + j] ^= exp[(la + log[b]) % n]
        return Poly(gf, out)

    def scale(self, s: int) -> "Poly":
        if s == 0:
            return Poly(self.gf)
        if s == 1:
            return self
        gf = self.gf
        return Poly(gf, [gf.mul(s, v) for v in self.c])

    def shift(self, k: int) -> "Poly":
        """Multiply by x**k (k >= 0)."""
        if not self.c:
            return self
        return Poly(self.gf, (0,) * k + self.c)

    def divmod(self, other: "Poly"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        gf = self.gf
        rem = list(self.c)
        dn = len(other.c) - 1
        lead_inv = gf.inv(other.c[-1])
        quot = [0] * max(0, len(rem) - dn)
        while len(rem) - 1 >= dn and rem:
            if rem[-1] == 0:
                rem.pop()
                continue
            k = len(rem) - 1 - dn
            f = gf.mul(rem[-1], lead_inv)
            quot[k] = f
            for i, v in enumerate(other.c):
                rem[k + i] ^= gf.mul(f, v)
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(gf, quot), Poly(gf, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def truncate(self, order: int) -> "Poly":
        """Reduce modulo x**order."""
        return Poly(self.gf, self.c[:order])

    def __call__(self, x0: int) -> int:
        """Horner evaluation."""
        gf = self.gf
        acc = 0
        for v in reversed(self.c):
            acc = gf.mul(acc, x0) ^ v
        return acc

    def derivative(self) -> "Poly":
        """Formal derivative; even-power terms vanish in characteristic 2."""
        out = [0] * max(0, len(self.c) - 1)
        for i in range(1, len(self.c), 2):
            out[i - 1] = self.c[i]
        return Poly(self.gf, out)

    def sqrt(self) -> "Poly":
        """Square root of a squared polynomial (Frobenius, index halving)."""
        for i in range(1, len(self.c), 2):
            if self.c[i]:
                raise NotASquare("nonzero odd-degree coefficient")
        gf = self.gf
        return Poly(gf, [gf.sqrt(v) for v in self.c[::2]])

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.gf.inv(self.c[-1]))

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def x_valuation(self) -> int:
        """Largest k with x**k dividing self (0 for the zero polynomial)."""
        for i, v in enumerate(self.c):
            if v:
                return i
        return 0

    def strip_x(self) -> tuple["Poly", int]:
        """Divide out the x-content; returns (quotient, valuation)."""
        k = self.x_valuation()
        return (Poly(self.gf, self.c[k:]), k) if k else (self, 0)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.c == other.c and self.gf == other.gf

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        if not self.c:
            return "Poly(0)"
        terms = [f"{v}*x^{i}" for i, v in enumerate(self.c) if v]
        return "Poly(" + " + ".join(terms) + ")"


def lagrange_interpolate(field: GF, points) -> Poly:
    """Unique polynomial of degree < len(points) through (x_i, y_i) pairs."""
    pts = list(points)
    acc = Poly.zero(field)
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        num = Poly.one(field)
        den = 1
        for j, (xj, _) in enumerate(pts):
            if i == j:
                continue
            num = num * Poly(field, (xj, 1))
            den = field.mul(den, xi ^ xj)
        acc = acc + num.scale(field.div(yi, den))
    return acc
