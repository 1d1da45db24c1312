"""Binary Krawtchouk polynomials K_n^(t)(x) and their centred / underlying forms.

With q = 2 the polynomials are

    K_n^(t)(x) = sum_{j=0}^{n} (-2)^j binom(t - j, n - j) binom(x, j).

(The general-q family multiplies the j-th term by (q-1)^(n-j) and uses -q
in place of -2; only q = 2 is supported.)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import (
    RatPoly,
    RationalLike,
    as_rational,
    poly_compose_linear,
    rat_binomial,
)


@dataclass(frozen=True)
class KrawtchoukSpec:
    n: int
    t: Fraction

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("degree n must be nonnegative")
        object.__setattr__(self, "t", as_rational(self.t))


@dataclass(frozen=True)
class UnderlyingSpec:
    m: int
    delta: int
    t: Fraction

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("m must be nonnegative")
        if self.delta not in (0, 1):
            raise ValueError("delta must be 0 or 1")
        object.__setattr__(self, "t", as_rational(self.t))

    @property
    def n(self) -> int:
        return 2 * self.m + self.delta


class ParityError(ArithmeticError):
    """The centred polynomial has a nonzero coefficient of the wrong parity."""


@lru_cache(maxsize=None)
def _falling_factorial(j: int) -> tuple[int, ...]:
    """Integer coefficients of x(x-1)...(x-j+1), ascending."""
    if j == 0:
        return (1,)
    prev = _falling_factorial(j - 1)
    out = [0] * (j + 1)
    for i, c in enumerate(prev):
        out[i + 1] += c
        out[i] -= (j - 1) * c
    return tuple(out)


def krawtchouk_poly(spec: KrawtchoukSpec | int, t: RationalLike | None = None) -> RatPoly:
    """K_n^(t)(x) as a RatPoly.  Accepts a spec or ``(n, t)``."""
    if not isinstance(spec, KrawtchoukSpec):
        spec = KrawtchoukSpec(spec, t)
    n, t = spec.n, spec.t
    # binom(t - j, n - j) for j = n, n-1, ..., 0 via binom(y, k) = y/k * binom(y-1, k-1)
    tail = [Fraction(0)] * (n + 1)
    tail[n] = Fraction(1)
    for j in range(n - 1, -1, -1):
        tail[j] = (t - j) / (n - j) * tail[j + 1]
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        w = (-2) ** j * tail[j] / factorial(j)
        if w:
            for i, s in enumerate(_falling_factorial(j)):
                if s:
                    coeffs[i] += w * s
    return RatPoly(coeffs)


def jacobi_at_zero(n: int, alpha: RationalLike, beta: RationalLike) -> Fraction:
    """P_n^(alpha, beta)(0) from the explicit binomial sum."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    total = Fraction(0)
    half = Fraction(1, 2)
    for j in range(n + 1):
        total += (
            rat_binomial(n + alpha, n - j)
            * rat_binomial(n + beta, j)
            * (-half) ** j
            * half ** (n - j)
        )
    return total


def check_jacobi_identity(spec: KrawtchoukSpec, x0: RationalLike) -> bool:
    """K_n^(t)(x0) == 2^n P_n^(t - x0 - n, x0 - n)(0), exactly."""
    x0 = as_rational(x0)
    n, t = spec.n, spec.t
    lhs = krawtchouk_poly(spec)(x0)
    rhs = 2 ** n * jacobi_at_zero(n, t - x0 - n, x0 - n)
    return lhs == rhs


def shifted_poly(spec: KrawtchoukSpec | int, t: RationalLike | None = None) -> RatPoly:
    """K_n^(t)(x + t/2); even when n is even, odd when n is odd."""
    if not isinstance(spec, KrawtchoukSpec):
        spec = KrawtchoukSpec(spec, t)
    return poly_compose_linear(krawtchouk_poly(spec), spec.t / 2, 1)


def underlying_poly(
    spec: UnderlyingSpec | int, delta: int | None = None, t: RationalLike | None = None
) -> RatPoly:
    """The degree-m polynomial U with U(x^2) * x^delta == K_{2m+delta}^(t)(x + t/2)."""
    if not isinstance(spec, UnderlyingSpec):
        spec = UnderlyingSpec(spec, delta, t)
    centred = shifted_poly(KrawtchoukSpec(spec.n, spec.t))
    d = spec.delta
    for j, c in enumerate(centred.coeffs):
        if (j - d) % 2 and c != 0:
            raise ParityError(f"coefficient of x^{j} is {c}, expected 0")
    return RatPoly(centred[2 * i + d] for i in range(spec.m + 1))


def descartes_bounds(f: RatPoly) -> tuple[int, int]:
    """Sign variations of f(x) and f(-x)."""
    if f.is_zero():
        raise ValueError("zero polynomial")

    def variations(cs):
        signs = [c > 0 for c in cs if c != 0]
        return sum(a != b for a, b in zip(signs, signs[1:]))

    pos = variations(f.coeffs)
    neg = variations([c if j % 2 == 0 else -c for j, c in enumerate(f.coeffs)])
    return pos, neg
