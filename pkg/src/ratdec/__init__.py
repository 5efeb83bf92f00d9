"""Reed-Solomon decoding via rational interpolation.

Hard-decision list decoding and GF(2^m) algebraic soft-decision decoding
built on Berlekamp key solving, weighted bivariate interpolation, and
rational root recovery, plus a channel simulator and an FER benchmark CLI.
"""

__version__ = "0.1.0"
