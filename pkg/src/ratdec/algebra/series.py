"""Truncated power series over GF(2^m), exact up to the truncation order."""

from __future__ import annotations

from .gf import GF
from .poly import Poly
from .rational import RationalFn


class Series:
    __slots__ = ("gf", "c", "order")

    def __init__(self, field: GF, coeffs, order: int):
        c = list(coeffs)[:order]
        c.extend([0] * (order - len(c)))
        self.gf = field
        self.c = tuple(c)
        self.order = order

    @classmethod
    def from_rational(cls, r: RationalFn, order: int) -> "Series":
        """Maclaurin expansion; requires den(0) != 0."""
        if r.den(0) == 0:
            raise ZeroDivisionError("rational function has a pole at 0")
        gf = r.gf
        d0_inv = gf.inv(r.den(0))
        out = []
        rem = list(r.num.c) + [0] * order
        den = r.den.c
        for i in range(order):
            t = gf.mul(rem[i], d0_inv)
            out.append(t)
            if t:
                for j, dv in enumerate(den):
                    if dv and i + j < len(rem):
                        rem[i + j] ^= gf.mul(t, dv)
        return cls(gf, out, order)

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "Series":
        return cls(p.gf, p.c, order)

    def poly(self) -> Poly:
        return Poly(self.gf, self.c)

    def __add__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        return Series(self.gf, [a ^ b for a, b in zip(self.c, other.c)], order)

    def __mul__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        gf = self.gf
        out = [0] * order
        for i, a in enumerate(self.c[:order]):
            if a == 0:
                continue
            for j, b in enumerate(other.c[: order - i]):
                if b:
                    out[i + j] ^= gf.mul(a, b)
        return Series(gf, out, order)

    def __eq__(self, other):
        return (isinstance(other, Series) and self.order == other.order
                and self.c == other.c)

    def __hash__(self):
        return hash((self.c, self.order))

    def __repr__(self):
        return f"Series({list(self.c)!r}, order={self.order})"
