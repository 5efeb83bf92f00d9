"""Vectorized GF(2^m) kernels on numpy int arrays.

Multiplication uses the padded-exp trick: log[0] is a large sentinel so
that any log sum involving a zero operand indexes into the zero-filled
tail of the padded exp table. Addition of field values is bitwise xor.
"""

from __future__ import annotations

import numpy as np

from .gf import GF

_CACHE: dict[tuple[int, int], "GFVec"] = {}


class GFVec:
    """numpy log/exp tables bound to one field."""

    def __init__(self, field: GF):
        self.field = field
        q, n = field.q, field.n
        self.zlog = 2 * q  # sentinel log for zero
        log = np.full(q, self.zlog, dtype=np.int64)
        log[1:] = [field.log[v] for v in range(1, q)]
        # legit log sums are <= 2(n-1); anything touching a zero is >= 2q
        pad = np.zeros(4 * q + 4, dtype=np.int64)
        idx = np.arange(2 * n - 1)
        pad[: 2 * n - 1] = np.array(field.exp, dtype=np.int64)[idx % n]
        self.log = log
        self.exp_pad = pad

    def mul(self, a, b):
        """Elementwise product of two int arrays (broadcasting ok)."""
        return self.exp_pad[self.log[a] + self.log[b]]

    def pow_range(self, base: int, count: int):
        """Array of base**i for i in [0, count)."""
        out = np.empty(count, dtype=np.int64)
        v = 1
        for i in range(count):
            out[i] = v
            v = self.field.mul(v, base)
        return out


def gfvec(field: GF) -> GFVec:
    key = (field.m, field.prim_poly)
    if key not in _CACHE:
        _CACHE[key] = GFVec(field)
    return _CACHE[key]
