"""Arithmetic in GF(2^m) via log/exp tables.

Field elements are plain ints in [0, 2^m); addition is xor, so there is no
wrapper element type. A GF object carries the tables and all operations.
The zero and one elements are the ints 0 and 1, and alpha, the class of x
modulo the primitive polynomial, is the int 2.
"""

from __future__ import annotations

from functools import lru_cache

# Primitive polynomials (as bitmask ints, LSB = constant term) for which
# x itself generates the multiplicative group. Overridable per field.
DEFAULT_PRIM_POLYS = {
    2: 0x7,
    3: 0xB,       # x^3 + x + 1
    4: 0x13,      # x^4 + x + 1
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,     # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x402B,
    15: 0x8003,
    16: 0x1100B,
}


def clmul(a: int, b: int) -> int:
    """Carry-less multiplication of two bitmask polynomials over GF(2)."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def clmod(a: int, mod: int) -> int:
    """Reduce bitmask polynomial a modulo bitmask polynomial mod."""
    dm = mod.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= mod << (a.bit_length() - 1 - dm)
    return a


def clmul_reduce(a: int, b: int, prim_poly: int) -> int:
    """Reference field product: carry-less multiply, then reduce.

    Independent of the log/exp tables; used as the multiplication oracle.
    """
    return clmod(clmul(a, b), prim_poly)


def is_irreducible(poly: int) -> bool:
    """Exhaustive irreducibility test for a bitmask polynomial over GF(2)."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for cand in range(2, 1 << (deg // 2 + 1)):
        if clmod(poly, cand) == 0:
            return False
    return True


class GF:
    """GF(2^m) with log/exp tables generated by alpha = x (the int 2)."""

    def __init__(self, m: int, prim_poly: int | None = None):
        if not 2 <= m <= 16:
            raise ValueError(f"extension degree m={m} out of supported range [2, 16]")
        if prim_poly is None:
            prim_poly = DEFAULT_PRIM_POLYS[m]
        if prim_poly.bit_length() - 1 != m:
            raise ValueError("prim_poly degree does not match m")
        if not is_irreducible(prim_poly):
            raise ValueError(f"prim_poly {prim_poly:#x} is reducible")
        self.m = m
        self.prim_poly = prim_poly
        self.q = 1 << m
        self.n = self.q - 1  # multiplicative group order, also the RS block length
        self.alpha = 2

        exp = [0] * self.n
        log = [0] * self.q
        v = 1
        for i in range(self.n):
            if v == 1 and i > 0:
                raise ValueError(f"x is not primitive modulo {prim_poly:#x}")
            exp[i] = v
            log[v] = i
            v = clmul_reduce(v, 2, prim_poly)
        if v != 1:
            raise ValueError(f"table generation did not cycle for {prim_poly:#x}")
        self.exp = exp
        self.log = log

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        s = self.log[a] + self.log[b]
        if s >= self.n:
            s -= self.n
        return self.exp[s]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^m)")
        return self.exp[(self.n - self.log[a]) % self.n]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero in GF(2^m)")
        if a == 0:
            return 0
        return self.exp[(self.log[a] - self.log[b]) % self.n]

    def pow(self, a: int, e: int) -> int:
        """a**e with integer exponent (negative allowed for nonzero a)."""
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % self.n]

    def sqrt(self, a: int) -> int:
        """Unique square root in characteristic 2: a**(2^(m-1))."""
        if a == 0:
            return 0
        return self.exp[(self.log[a] << (self.m - 1)) % self.n]

    def alpha_pow(self, i: int) -> int:
        """alpha**i for any integer i."""
        return self.exp[i % self.n]

    def __eq__(self, other):
        return isinstance(other, GF) and (self.m, self.prim_poly) == (other.m, other.prim_poly)

    def __hash__(self):
        return hash((self.m, self.prim_poly))

    def __repr__(self):
        return f"GF(2^{self.m}, prim_poly={self.prim_poly:#x})"


@lru_cache(maxsize=None)
def gf(m: int, prim_poly: int | None = None) -> GF:
    """Cached field constructor; table generation is done once per field."""
    return GF(m, prim_poly)
