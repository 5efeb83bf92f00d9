"""Channel simulation: received words with per-symbol posteriors.

Two memoryless models: the q-ary symmetric channel and BPSK over AWGN
with m bits per symbol, bit likelihoods combined multiplicatively and
renormalized. Posteriors are stored in the decoder's error-value
indexing (column j holds the value alpha^(-j) relative to the hard
decision).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ma import PosteriorMatrix
from .rscode import CodeParams, ErrorPattern, pattern_between

QSC = "qsc"
AWGN = "awgn"


@dataclass(frozen=True)
class ChannelSpec:
    kind: str
    param: float  # symbol error probability for qsc, per-bit Es/N0 in dB for awgn

    def __post_init__(self):
        if self.kind not in (QSC, AWGN):
            raise ValueError(f"unknown channel kind {self.kind!r}")
        if self.kind == QSC and not 0.0 <= self.param <= 1.0:
            raise ValueError("qsc probability must be in [0, 1]")


@dataclass(frozen=True)
class ReceivedWord:
    hard: tuple[int, ...]
    pi: PosteriorMatrix
    observations: tuple | None = None  # per-bit samples for awgn


def transmit(params: CodeParams, spec: ChannelSpec, codeword,
             rng: np.random.Generator) -> ReceivedWord:
    if spec.kind == QSC:
        return _transmit_qsc(params, spec.param, codeword, rng)
    return _transmit_awgn(params, spec.param, codeword, rng)


def error_pattern_of(received: ReceivedWord, codeword) -> ErrorPattern:
    """Ground-truth pattern between the hard decision and the codeword."""
    return pattern_between(received.hard, codeword)


def _transmit_qsc(params: CodeParams, p: float, codeword,
                  rng: np.random.Generator) -> ReceivedWord:
    q, n = params.field.q, params.n
    word = list(codeword)
    flips = rng.random(n) < p
    for i in np.flatnonzero(flips):
        delta = int(rng.integers(1, q))
        word[i] ^= delta
    probs = np.full((n, n), p / (q - 1), dtype=np.float64)
    hard = np.full(n, 1.0 - p, dtype=np.float64)
    return ReceivedWord(hard=tuple(word), pi=PosteriorMatrix(params, probs, hard))


def _transmit_awgn(params: CodeParams, snr_db: float, codeword,
                   rng: np.random.Generator) -> ReceivedWord:
    field = params.field
    m, n, q = field.m, params.n, field.q
    sigma = float(np.sqrt(1.0 / (2.0 * 10.0 ** (snr_db / 10.0))))
    # symbol value bits, LSB first, BPSK-mapped to +-1
    sym_bits = ((np.arange(q)[:, None] >> np.arange(m)[None, :]) & 1)
    bpsk = 1.0 - 2.0 * sym_bits  # bit 0 -> +1
    tx = bpsk[np.asarray(codeword, dtype=np.int64)]  # (n, m)
    y = tx + sigma * rng.standard_normal((n, m))
    # log-likelihood of every candidate symbol per position
    ll = -((y[:, None, :] - bpsk[None, :, :]) ** 2).sum(axis=2) / (2.0 * sigma**2)
    ll -= ll.max(axis=1, keepdims=True)
    post = np.exp(ll)
    post /= post.sum(axis=1, keepdims=True)
    hard_syms = post.argmax(axis=1)
    probs = np.zeros((n, n), dtype=np.float64)
    hard = np.zeros(n, dtype=np.float64)
    for i in range(n):
        z = int(hard_syms[i])
        hard[i] = post[i, z]
        for j in range(1, n + 1):
            e = field.alpha_pow(-j)
            probs[i, j - 1] = post[i, z ^ e]
    return ReceivedWord(hard=tuple(int(s) for s in hard_syms),
                        pi=PosteriorMatrix(params, probs, hard),
                        observations=tuple(map(tuple, y.tolist())))
