"""Multiplicity assignment from the posterior matrix.

Rows are positions i = 1..n, columns are nonzero error values in the
alpha^(-j) indexing, j = 1..n; the hard-decision posterior is kept
separately since the hard cell carries no interpolation points (its
implied multiplicity is the y-degree bound itself). The greedy spends
the increment budget one unit at a time on the cell maximizing
Pi(cell)/(M(cell)+1), which maximizes <M, Pi> and thereby minimizes the
expected premise slack W(M) at fixed cost.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .keysolver import OrderedKeys
from .rscode import CodeParams


class PosteriorMatrix:
    """Per-(position, error value) posteriors plus hard-decision column."""

    def __init__(self, params: CodeParams, probs: np.ndarray, hard: np.ndarray):
        probs = np.asarray(probs, dtype=np.float64)
        hard = np.asarray(hard, dtype=np.float64)
        n = params.n
        if probs.shape != (n, n) or hard.shape != (n,):
            raise ValueError("posterior matrix must be n x n with an n-vector of hard posteriors")
        if (probs < -1e-12).any() or (probs > 1 + 1e-12).any():
            raise ValueError("posterior entries must lie in [0, 1]")
        sums = probs.sum(axis=1) + hard
        if (sums > 1 + 1e-6).any():
            raise ValueError("per-position posterior mass exceeds 1")
        self.params = params
        self.probs = probs
        self.hard = hard

    def col_of_value(self, e: int) -> int:
        """0-based column of error value e = alpha^(-j)."""
        if e == 0:
            raise ValueError("zero error value has no column")
        field = self.params.field
        j = (-field.log[e]) % field.n
        if j == 0:
            j = field.n
        return j - 1

    def value_of_col(self, col: int) -> int:
        return self.params.field.alpha_pow(-(col + 1))

    def get(self, position: int, e: int) -> float:
        return float(self.probs[position - 1, self.col_of_value(e)])

    def flipped(self, position: int, col: int) -> "PosteriorMatrix":
        """Re-index row `position` after flipping the hard decision by value_of_col(col).

        The flipped cell's mass becomes the new hard posterior; every
        other cell moves to the column of its error value relative to
        the new hard decision; the old hard posterior lands on the
        column of the flip value itself.
        """
        field = self.params.field
        flip = self.value_of_col(col)
        row = self.probs[position - 1]
        new_row = np.zeros_like(row)
        for c in range(self.params.n):
            e_new = self.value_of_col(c) ^ flip
            if e_new == 0:
                continue  # this is the new hard cell
            new_row[self.col_of_value(e_new)] = row[c]
        new_row[self.col_of_value(flip)] = self.hard[position - 1]
        probs = self.probs.copy()
        probs[position - 1] = new_row
        hard = self.hard.copy()
        hard[position - 1] = row[col]
        return PosteriorMatrix(self.params, probs, hard)


class MultiplicityMatrix:
    """Nonnegative integer multiplicities in the same indexing as Pi."""

    def __init__(self, params: CodeParams, m: np.ndarray):
        self.params = params
        self.m = np.asarray(m, dtype=np.int64)

    def get(self, position: int, e: int) -> int:
        field = self.params.field
        j = (-field.log[e]) % field.n
        if j == 0:
            j = field.n
        return int(self.m[position - 1, j - 1])

    def cost(self) -> int:
        m = self.m
        return int((m * (m + 1) // 2).sum())

    def points(self):
        """Yield (position, error value, multiplicity) for nonzero cells."""
        field = self.params.field
        for i0, j0 in zip(*np.nonzero(self.m)):
            yield int(i0) + 1, field.alpha_pow(-(int(j0) + 1)), int(self.m[i0, j0])


@dataclass(frozen=True)
class Assignment:
    m: MultiplicityMatrix
    c: int
    d_y: int
    overflow_cells: tuple[tuple[int, int], ...]  # 0-based (row, col) with M > D_Y


def d_y_for_cost(c: int, keys: OrderedKeys) -> int:
    """Largest D with (L_b+1-L_a) D (D+1) / 4 <= C + 1, integer-exact."""
    delta = keys.l_b + 1 - keys.l_a
    bound = 4 * (c + 1)
    d = int(math.isqrt(bound // max(delta, 1))) + 2
    while delta * d * (d + 1) > bound:
        d -= 1
    return d


def assign(pi: PosteriorMatrix, budget: int, keys: OrderedKeys) -> Assignment:
    """Greedy multiplicity assignment with `budget` unit increments.

    Ties break row-major; increments stop early once every remaining
    cell has zero posterior (they could never help the inner product).
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    n = pi.params.n
    m = np.zeros((n, n), dtype=np.int64)
    ratio = pi.probs.copy()
    for _ in range(budget):
        flat = int(np.argmax(ratio))
        if ratio.flat[flat] <= 0.0:
            break
        i0, j0 = divmod(flat, n)
        m[i0, j0] += 1
        ratio[i0, j0] = pi.probs[i0, j0] / (m[i0, j0] + 1)
    mm = MultiplicityMatrix(pi.params, m)
    c = mm.cost()
    d_y = d_y_for_cost(c, keys)
    overflow = tuple((int(i), int(j)) for i, j in zip(*np.nonzero(m > d_y)))
    return Assignment(m=mm, c=c, d_y=d_y, overflow_cells=overflow)


def expected_w(m: MultiplicityMatrix, pi: PosteriorMatrix, c: int, d_y: int) -> float:
    """Expected premise slack under the uniform-coset model."""
    if d_y < 1:
        raise ValueError("d_y must be >= 1")
    inner = float((pi.probs * (m.m - d_y)).sum())
    return ((c + 1) / (d_y + 1) - inner) / d_y


def soft_premise(m: MultiplicityMatrix, c: int, d_y: int, keys: OrderedKeys,
                 locations, values) -> bool:
    """Both soft-decoding existence conditions, evaluated exactly.

    Requires the ground-truth error pattern, so this is a test-side
    diagnostic rather than anything the decoder can gate on.
    """
    la, lb = keys.l_a, keys.l_b
    deg = len(locations)
    total = sum(m.get(i, e) for i, e in zip(locations, values))
    lhs = Fraction(c + 1, d_y + 1) + d_y * (Fraction(deg) - Fraction(3 * la + lb + 1, 4))
    eq5 = lhs <= total
    eq6 = Fraction((lb + 1 - la) * d_y * (d_y + 1), 4) <= c + 1
    return eq5 and eq6


def asymptotic_condition(pi: PosteriorMatrix, keys: OrderedKeys,
                         locations, values) -> bool:
    """Large-cost diagnostic: deg(Lambda) - L_a against the Pi mass on the truth."""
    if not locations:
        return True
    la, lb = keys.l_a, keys.l_b
    pp = float((pi.probs * pi.probs).sum())
    if pp <= 0.0:
        return False
    mass = sum(pi.get(i, e) for i, e in zip(locations, values))
    return len(locations) - la <= math.sqrt((lb + 1 - la) / (2.0 * pp)) * mass
