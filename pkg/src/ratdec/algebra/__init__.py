"""Algebra tower: GF(2^m) scalars, polynomials, rationals, series, bivariates."""

from .gf import DEFAULT_PRIM_POLYS, GF, clmul_reduce, gf, is_irreducible
from .poly import MINUS_INFINITY, NotASquare, Poly, lagrange_interpolate
from .rational import INFINITY, RationalFn
from .series import Series
from .bipoly import BiPoly, binom_odd

__all__ = [
    "DEFAULT_PRIM_POLYS", "GF", "clmul_reduce", "gf", "is_irreducible",
    "MINUS_INFINITY", "NotASquare", "Poly", "lagrange_interpolate",
    "INFINITY", "RationalFn", "Series", "BiPoly", "binom_odd",
]
