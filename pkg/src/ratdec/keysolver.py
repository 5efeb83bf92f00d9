"""Berlekamp key solving and the rational decoding frame.

The Berlekamp iteration tracks the evaluator pair (omega, x*kappa)
through exactly the same transformations as the connection pair
(lambda, x*delta); that shared transformation is what makes the
determinant a*d - b*c a unit times a power of x, hence nonzero on the
whole support, and is also why any locator decomposition
Lambda = a*u + b*v carries over to Omega = c*u + d*v.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import INFINITY, GF, Poly, RationalFn
from .rscode import CodeParams


class NoValidTheta(RuntimeError):
    """At least two admissible values always exist; raising signals a solver bug."""


@dataclass(frozen=True)
class KeyState:
    lam: Poly
    delta: Poly
    omega: Poly
    x_kappa: Poly
    l_lambda: int
    iterations: int

    @property
    def l_xdelta(self) -> int:
        return self.iterations + 1 - self.l_lambda


@dataclass(frozen=True)
class OrderedKeys:
    a: Poly
    b: Poly
    c: Poly
    d: Poly
    l_a: int
    l_b: int
    a_is_lambda: bool


@dataclass(frozen=True)
class ThetaFrame:
    theta: object  # field int or INFINITY
    h: RationalFn
    phi: RationalFn
    keys: OrderedKeys

    @property
    def h_prime(self) -> RationalFn:
        return self.h.derivative()


def berlekamp(field: GF, s: Poly, n_minus_k: int) -> KeyState:
    """Berlekamp iteration over the first n-k syndromes.

    Starts from lambda=1, delta=1, omega=0, x*kappa=1 (kappa = 1/x) and
    applies the Massey update; the (omega, kappa) pair follows the rule
    applied to (lambda, delta) verbatim.
    """
    if s.degree >= n_minus_k:
        raise ValueError("syndrome polynomial longer than n-k")
    lam = [1]
    delta = [1]
    omega: list[int] = []
    x_kappa = [1]
    big_l = 0
    mul, inv = field.mul, field.inv
    sc = list(s.c) + [0] * (n_minus_k - len(s.c))

    for r in range(n_minus_k):
        disc = 0
        for j, lj in enumerate(lam):
            if lj and r - j >= 0 and sc[r - j]:
                disc ^= mul(lj, sc[r - j])
        if disc == 0:
            delta = [0] + delta
            x_kappa = [0] + x_kappa
            continue
        # lambda' = lambda + disc * x * delta ; omega' = omega + disc * (x kappa)
        new_lam = _add(lam, _scale(field, [0] + delta, disc))
        new_omega = _add(omega, _scale(field, x_kappa, disc))
        if 2 * big_l <= r:
            di = inv(disc)
            delta = _scale(field, lam, di)
            x_kappa = [0] + _scale(field, omega, di)
            big_l = r + 1 - big_l
        else:
            delta = [0] + delta
            x_kappa = [0] + x_kappa
        lam = new_lam
        omega = new_omega

    return KeyState(
        lam=Poly(field, lam),
        delta=Poly(field, delta),
        omega=Poly(field, omega),
        x_kappa=Poly(field, x_kappa),
        l_lambda=big_l,
        iterations=n_minus_k,
    )


def _add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] ^= v
    return out


def _scale(field: GF, a: list[int], s: int) -> list[int]:
    if s == 1:
        return list(a)
    mul = field.mul
    return [mul(s, v) for v in a]


def order_keys(ks: KeyState) -> OrderedKeys:
    """Reorder to (a, b, c, d) with L_a <= L_b per the pairing rule."""
    x_delta = ks.delta.shift(1)
    if ks.l_lambda <= ks.l_xdelta:
        return OrderedKeys(a=ks.lam, b=x_delta, c=ks.omega, d=ks.x_kappa,
                           l_a=ks.l_lambda, l_b=ks.l_xdelta, a_is_lambda=True)
    return OrderedKeys(a=x_delta, b=ks.lam, c=ks.x_kappa, d=ks.omega,
                       l_a=ks.l_xdelta, l_b=ks.l_lambda, a_is_lambda=False)


def theta_is_valid(keys: OrderedKeys, params: CodeParams, theta) -> bool:
    """True iff f = b - theta*a (f = a at infinity) has no support root."""
    f = keys.a if theta is INFINITY else keys.b + keys.a.scale(theta)
    if f.is_zero:
        return False
    return all(f(params.root_point(i)) for i in range(1, params.n + 1))


def theta_candidates(field: GF):
    """Scan order: 0 first, then the exp-table order, then infinity."""
    yield 0
    yield from field.exp
    yield INFINITY


def select_thetas(keys: OrderedKeys, params: CodeParams):
    """First two valid theta values in scan order; theta1 is finite.

    At least two valid values exist because b/a takes at most n values
    on the n support points while GF(q) plus infinity has q+1 members;
    only one candidate is infinite, so the first valid one is finite.
    """
    found = []
    for cand in theta_candidates(params.field):
        if theta_is_valid(keys, params, cand):
            found.append(cand)
            if len(found) == 2:
                return found[0], found[1]
    raise NoValidTheta(f"found {len(found)} valid theta values, expected >= 2")


def build_frame(keys: OrderedKeys, theta, field: GF) -> ThetaFrame:
    """Construct h and phi for a chosen theta (characteristic-2 signs)."""
    if theta is INFINITY:
        h = RationalFn(keys.b, keys.a)
        phi_num = keys.a * keys.d + keys.b * keys.c
        phi = RationalFn(phi_num, keys.a * keys.a)
    else:
        f = keys.b + keys.a.scale(theta)
        h = RationalFn(keys.a, f)
        phi_num = keys.a * keys.d + keys.b * keys.c
        phi = RationalFn(phi_num, f * f)
    return ThetaFrame(theta=theta, h=h, phi=phi, keys=keys)


def point_value(frame: ThetaFrame, x: int, e: int) -> int:
    """p(x, e) = phi(x)/(e*x) + h'(x); the interpolation target for g'.

    Injective in e for fixed support x because phi never vanishes there.
    """
    if e == 0 or x == 0:
        raise ValueError("point_value needs nonzero e and x")
    field = frame.h.gf
    phi_val = frame.phi(x)
    hp_val = frame.h_prime(x)
    assert phi_val is not INFINITY and hp_val is not INFINITY
    return field.div(phi_val, field.mul(e, x)) ^ hp_val
