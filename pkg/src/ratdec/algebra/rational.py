"""Rational functions num/den over GF(2^m)[x].

Canonical form has gcd(num, den) = 1 and a monic denominator; with that,
equality is plain component comparison and an evaluation can only be a
field value or INFINITY (a 0/0 at a point would contradict coprimality).
"""

from __future__ import annotations

from .gf import GF
from .poly import Poly


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


class RationalFn:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num = Poly.zero(num.gf)
            den = Poly.one(num.gf)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lead_inv = num.gf.inv(den.c[-1])
            if lead_inv != 1:
                num = num.scale(lead_inv)
                den = den.scale(lead_inv)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalFn":
        return cls(p, Poly.one(p.gf))

    @classmethod
    def zero(cls, field: GF) -> "RationalFn":
        return cls(Poly.zero(field), Poly.one(field))

    @classmethod
    def one(cls, field: GF) -> "RationalFn":
        return cls(Poly.one(field), Poly.one(field))

    @property
    def gf(self) -> GF:
        return self.num.gf

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __sub__ = __add__

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFn") -> "RationalFn":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RationalFn":
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFn(self.den, self.num)

    def scale(self, s: int) -> "RationalFn":
        return RationalFn(self.num.scale(s), self.den)

    def add_scalar(self, s: int) -> "RationalFn":
        return RationalFn(self.num + self.den.scale(s), self.den)

    def derivative(self) -> "RationalFn":
        """Quotient rule; signs collapse in characteristic 2."""
        return RationalFn(self.num.derivative() * self.den + self.num * self.den.derivative(),
                          self.den * self.den)

    def __call__(self, x0: int):
        """Evaluate at x0; returns a field int or INFINITY."""
        d = self.den(x0)
        n = self.num(x0)
        if d == 0:
            assert n != 0, "0/0 after canonicalization"
            return INFINITY
        return self.gf.div(n, d)

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented
        # cross-multiplied comparison, per the canonical-form invariant
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFn({self.num!r} / {self.den!r})"
