"""Exact rational arithmetic: dense univariate polynomials over Q, p-adic
valuations, resultants and discriminants.

Rationals are ``fractions.Fraction``.  Polynomials are stored densely in
ascending powers: ``coeffs[j]`` is the coefficient of ``x**j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, gcd, isqrt, lcm
from numbers import Rational
from typing import Iterable, Sequence, Union

ExactRational = Fraction
RationalLike = Union[int, Fraction]


class _Infinity:
    """Valuation of zero.  Compares greater than every integer."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("krawtchouk_np.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()
Valuation = Union[int, _Infinity]


# ---------------------------------------------------------------- primes

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """All primes p <= n (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


# ---------------------------------------------------------------- scalars

def as_rational(x: RationalLike | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rat_binomial(x: RationalLike, j: int) -> Fraction:
    """Generalized binomial coefficient x(x-1)...(x-j+1)/j!."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    x = as_rational(x)
    if x.denominator == 1 and x >= 0:
        return Fraction(comb(x.numerator, j))
    num = Fraction(1)
    for i in range(j):
        num *= x - i
    fact = 1
    for i in range(2, j + 1):
        fact *= i
    return num / fact


def _vp_int(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(r: RationalLike, p: int) -> Valuation:
    """p-adic valuation of a rational; INFINITY for zero."""
    _check_prime(p)
    r = as_rational(r)
    if r == 0:
        return INFINITY
    return _vp_int(r.numerator, p) - _vp_int(r.denominator, p)


def vp_factorial(n: int, p: int) -> int:
    """v_p(n!) from the base-p digit sum of n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_prime(p)
    digit_sum, m = 0, n
    while m:
        m, c = divmod(m, p)
        digit_sum += c
    return (n - digit_sum) // (p - 1)


def is_rational_square(r: RationalLike) -> bool:
    r = as_rational(r)
    if r < 0:
        return False
    a, b = r.numerator, r.denominator
    return isqrt(a) ** 2 == a and isqrt(b) ** 2 == b


def rational_sqrt(r: RationalLike) -> Fraction | None:
    """Nonnegative exact square root, or None if r is not a rational square."""
    r = as_rational(r)
    if not is_rational_square(r):
        return None
    return Fraction(isqrt(r.numerator), isqrt(r.denominator))


def format_rational(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


# ---------------------------------------------------------------- polynomials

def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class RatPoly:
    """Immutable dense polynomial over Q, ascending powers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        object.__setattr__(self, "coeffs", tuple(_trim([as_rational(c) for c in coeffs])))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def x(cls) -> RatPoly:
        return cls([0, 1])

    @classmethod
    def constant(cls, c: RationalLike) -> RatPoly:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, j: int) -> Fraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RatPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            s = format_rational(c)
            terms.append(s if j == 0 else f"{s}*x" if j == 1 else f"{s}*x^{j}")
        return " + ".join(terms)

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __add__(self, other):
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return poly_add(self, -_coerce(other))

    def __rsub__(self, other):
        return poly_add(_coerce(other), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __call__(self, x0: RationalLike) -> Fraction:
        return poly_eval(self, x0)


def _coerce(f) -> RatPoly:
    if isinstance(f, RatPoly):
        return f
    if isinstance(f, (int, Fraction)):
        return RatPoly([f])
    raise TypeError(f"cannot use {f!r} as a polynomial")


def poly_add(f: RatPoly, g: RatPoly) -> RatPoly:
    n = max(len(f.coeffs), len(g.coeffs))
    return RatPoly(f[j] + g[j] for j in range(n))


def poly_scale(f: RatPoly, c: RationalLike) -> RatPoly:
    c = as_rational(c)
    return RatPoly(c * a for a in f.coeffs)


def poly_mul(f: RatPoly, g: RatPoly) -> RatPoly:
    if f.is_zero() or g.is_zero():
        return RatPoly()
    out = [Fraction(0)] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a:
            for j, b in enumerate(g.coeffs):
                out[i + j] += a * b
    return RatPoly(out)


def poly_eval(f: RatPoly, x0: RationalLike) -> Fraction:
    x0 = as_rational(x0)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x0 + c
    return acc


def poly_compose_linear(f: RatPoly, a: RationalLike, b: RationalLike = 1) -> RatPoly:
    """Return f(b*x + a)."""
    a, b = as_rational(a), as_rational(b)
    # Horner in the ring: acc <- acc*(b x + a) + c
    acc: list[Fraction] = []
    for c in reversed(f.coeffs):
        nxt = [Fraction(0)] * (len(acc) + 1)
        for i, v in enumerate(acc):
            nxt[i] += v * a
            nxt[i + 1] += v * b
        nxt[0] += c
        acc = nxt
    return RatPoly(acc)


def poly_derivative(f: RatPoly) -> RatPoly:
    return RatPoly(j * c for j, c in enumerate(f.coeffs) if j)


def poly_divmod(f: RatPoly, g: RatPoly) -> tuple[RatPoly, RatPoly]:
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    dg = g.degree
    lc = g.leading_coefficient
    quo = [Fraction(0)] * max(len(rem) - dg, 0)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k] / lc
        if c:
            quo[k - dg] = c
            for i, gc in enumerate(g.coeffs):
                rem[k - dg + i] -= c * gc
    return RatPoly(quo), RatPoly(rem[:dg] if dg > 0 else [])


def poly_gcd(f: RatPoly, g: RatPoly) -> RatPoly:
    """Monic gcd over Q (zero if both inputs are zero)."""
    while not g.is_zero():
        f, g = g, poly_divmod(f, g)[1]
    if f.is_zero():
        return f
    return poly_scale(f, 1 / f.leading_coefficient)


# ---------------------------------------------------------------- integer forms

@dataclass(frozen=True)
class IntPoly:
    """Primitive integer polynomial; ``scale * IntPoly`` is the source RatPoly."""

    coeffs: tuple[int, ...]
    scale: Fraction = Fraction(1)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1]

    def to_ratpoly(self) -> RatPoly:
        return RatPoly(self.scale * c for c in self.coeffs)

    def as_ratpoly(self) -> RatPoly:
        """The integer polynomial itself, without the scale."""
        return RatPoly(self.coeffs)

    def __str__(self):
        return str(self.as_ratpoly())


def content(coeffs: Sequence[int]) -> int:
    return reduce(gcd, coeffs, 0)


def primitive_integer_form(f: RatPoly) -> IntPoly:
    """Clear denominators and remove content.  Sign: positive leading coefficient."""
    if f.is_zero():
        raise ValueError("zero polynomial has no primitive form")
    den = lcm(*(c.denominator for c in f.coeffs))
    ints = [int(c * den) for c in f.coeffs]
    g = content(ints)
    if ints[-1] < 0:
        g = -g
    return IntPoly(tuple(c // g for c in ints), Fraction(g, den))


def int_poly(coeffs: Sequence[int]) -> IntPoly:
    """Primitive IntPoly from integer coefficients (content moved into the scale)."""
    return primitive_integer_form(RatPoly(coeffs))


# ---------------------------------------------------------------- resultants

def _zdeg(a: list[int]) -> int:
    return len(a) - 1


def _zprem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b over Z: lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, bc in enumerate(b):
            r[shift + i] -= lr * bc
        r.pop()
        _trim(r)
        e -= 1
    if e > 0:
        f = lb ** e
        r = [c * f for c in r]
    return r


def _zresultant(a: list[int], b: list[int]) -> int:
    """Resultant over Z by the subresultant pseudo-remainder sequence."""
    da, db = _zdeg(a), _zdeg(b)
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -1
    ca, cb = content(a), content(b)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    t = ca ** db * cb ** da
    g = h = 1
    while True:
        da, db = _zdeg(a), _zdeg(b)
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _zprem(a, b)
        if not r:
            return 0
        div = g * h ** delta
        a, b = b, [c // div for c in r]
        g = a[-1]
        h = g ** delta // h ** (delta - 1) if delta >= 1 else h
        if _zdeg(b) == 0:
            da = _zdeg(a)
            h = b[0] ** da // h ** (da - 1)
            return s * t * h


def resultant(f: IntPoly | Sequence[int], g: IntPoly | Sequence[int]) -> int:
    """Resultant of two nonzero integer polynomials (coefficients ascending)."""
    a = list(f.coeffs if isinstance(f, IntPoly) else f)
    b = list(g.coeffs if isinstance(g, IntPoly) else g)
    _trim(a)
    _trim(b)
    if not a or not b:
        raise ValueError("resultant of the zero polynomial is undefined")
    return _zresultant(a, b)


def int_discriminant(coeffs: Sequence[int]) -> int:
    """Discriminant of an integer polynomial of degree >= 1."""
    if isinstance(coeffs, IntPoly):
        coeffs = coeffs.coeffs
    a = _trim(list(coeffs))
    n = len(a) - 1
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    da = [j * c for j, c in enumerate(a)][1:]
    r = _zresultant(a, da)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, a[-1])
    assert rem == 0
    return q


def discriminant(f: RatPoly) -> Fraction:
    """(-1)^(n(n-1)/2) res(f, f') / lc(f)."""
    if f.degree < 1:
        raise ValueError("discriminant needs degree >= 1")
    F = primitive_integer_form(f)
    n = f.degree
    return Fraction(int_discriminant(F.coeffs)) * F.scale ** (2 * n - 2)


def depress(f: RatPoly) -> RatPoly:
    """Monic normalization followed by removal of the x^(n-1) term."""
    n = f.degree
    if n < 2:
        raise ValueError("depress needs degree >= 2")
    monic = poly_scale(f, 1 / f.leading_coefficient)
    shift = -monic[n - 1] / n
    return poly_compose_linear(monic, shift, 1)
