"""RS code parameters, encoding, syndromes, and codeword reconstruction.

Positions run i = 1..n with evaluation point alpha^i, and the syndrome
polynomial starts at exponent 0: S_j = sum_i r_i alpha^(i*j) for
j < n-k, which is the truncation of the Fourier transform E of the
error pattern. A word is a codeword iff those n-k coefficients vanish,
so the message polynomial uses the degree set {1..k} (a constant term
would land on the S_0 check).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import GF, Poly, gf


class InconsistentErasure(ValueError):
    """Erasure reconstruction disagreed with a supplied position."""


@dataclass(frozen=True)
class CodeParams:
    field: GF
    n: int
    k: int

    def __post_init__(self):
        if self.n != self.field.q - 1:
            raise ValueError("block length must be q - 1")
        if not 1 <= self.k < self.n:
            raise ValueError("need 1 <= k < n")

    @property
    def t(self) -> int:
        return (self.n - self.k) // 2

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    def support(self, i: int) -> int:
        """Evaluation point of position i (1-based)."""
        return self.field.alpha_pow(i)

    def root_point(self, i: int) -> int:
        """Decoder coordinate alpha^(-i) of position i (1-based)."""
        return self.field.alpha_pow(-i)


def rs_code(m: int, k: int, prim_poly: int | None = None) -> CodeParams:
    field = gf(m, prim_poly)
    return CodeParams(field, field.n, k)


@dataclass(frozen=True)
class ErrorPattern:
    """Ground-truth errors: 1-based locations with nonzero values."""

    locations: tuple[int, ...]
    values: tuple[int, ...]

    @property
    def weight(self) -> int:
        return len(self.locations)

    def locator(self, params: CodeParams) -> Poly:
        """Lambda(x) = prod_(i in I) (1 - alpha^i x)."""
        field = params.field
        acc = Poly.one(field)
        for i in self.locations:
            acc = acc * Poly(field, (1, params.support(i)))
        return acc


def encode(params: CodeParams, message) -> list[int]:
    """Evaluation encoding with message polynomial sum_{l=1..k} m_l x^l."""
    msg = list(message)
    if len(msg) != params.k:
        raise ValueError(f"message length must be k={params.k}")
    f = Poly(params.field, [0] + msg)
    return [f(params.support(i)) for i in range(1, params.n + 1)]


def syndromes(params: CodeParams, received) -> Poly:
    """S = E mod x^(n-k) for the error pattern of the received word."""
    field = params.field
    word = list(received)
    if len(word) != params.n:
        raise ValueError(f"received length must be n={params.n}")
    exp, log, n = field.exp, field.log, field.n
    out = []
    for j in range(params.n - params.k):
        acc = 0
        for i, r in enumerate(word, start=1):
            if r:
                acc ^= exp[(log[r] + i * j) % n]
        out.append(acc)
    return Poly(field, out)


def fourier(params: CodeParams, word) -> Poly:
    """Full Fourier transform E with E_j = sum_i w_i alpha^(i*j)."""
    field = params.field
    exp, log, n = field.exp, field.log, field.n
    out = []
    for j in range(params.n):
        acc = 0
        for i, r in enumerate(word, start=1):
            if r:
                acc ^= exp[(log[r] + i * j) % n]
        out.append(acc)
    return Poly(field, out)


def verify_key_equation(lam: Poly, omega: Poly, s: Poly, gamma: int) -> bool:
    """Check Lambda * (E mod x^gamma) = Omega mod x^gamma.

    This is the generalized key equation used as a test oracle; s is
    expected to carry at least gamma coefficients of E.
    """
    lhs = (lam * s.truncate(gamma)).truncate(gamma)
    return lhs == omega.truncate(gamma)


def apply_pattern(params: CodeParams, word, pattern: ErrorPattern) -> list[int]:
    out = list(word)
    for i, e in zip(pattern.locations, pattern.values):
        out[i - 1] ^= e
    return out


def pattern_between(received, codeword) -> ErrorPattern:
    """Ground-truth pattern: where and by how much received differs."""
    locs, vals = [], []
    for idx, (r, c) in enumerate(zip(received, codeword)):
        if r != c:
            locs.append(idx + 1)
            vals.append(r ^ c)
    return ErrorPattern(tuple(locs), tuple(vals))


def erasure_decode(params: CodeParams, received, known_good_positions) -> list[int]:
    """Re-encode from k trusted positions; check the rest of them.

    Solves for the k message coefficients from the first k supplied
    positions, re-encodes, and raises InconsistentErasure if the result
    disagrees with any supplied position.
    """
    positions = sorted(set(known_good_positions))
    if len(positions) < params.k:
        raise ValueError("need at least k known-good positions")
    field = params.field
    k = params.k
    # rows: [alpha^(i*1) .. alpha^(i*k)] m = received_i
    mat = []
    rhs = []
    for i in positions[:k]:
        mat.append([field.alpha_pow(i * l) for l in range(1, k + 1)])
        rhs.append(received[i - 1])
    msg = _solve_linear(field, mat, rhs)
    if msg is None:
        raise InconsistentErasure("singular interpolation system")
    word = encode(params, msg)
    for i in positions:
        if word[i - 1] != received[i - 1]:
            raise InconsistentErasure(f"re-encoded word disagrees at position {i}")
    return word


def apply_error_values(params: CodeParams, received, locations, values):
    """Subtract claimed error values; returns the codeword or None.

    None signals an invalid pattern (nonzero syndromes after applying).
    """
    word = list(received)
    for i, e in zip(locations, values):
        word[i - 1] ^= e
    if syndromes(params, word).is_zero:
        return word
    return None


def _solve_linear(field: GF, mat, rhs):
    """Gaussian elimination over GF(2^m); None if singular."""
    n = len(mat)
    a = [row[:] + [r] for row, r in zip(mat, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = field.inv(a[col][col])
        a[col] = [field.mul(inv, v) for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v ^ field.mul(f, w) for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]
