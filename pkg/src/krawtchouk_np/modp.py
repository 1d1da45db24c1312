"""Polynomials over F_p as residue lists (ascending powers), distinct-degree
factorization, and Hensel lifting of simple roots."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import IntPoly, _check_prime


class BadPrime(ValueError):
    """p divides the leading coefficient."""


class NotSquarefree(ValueError):
    pass


@dataclass(frozen=True)
class PrimePoly:
    modulus: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


@dataclass(frozen=True, order=True)
class CycleType:
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))

    def __str__(self):
        return "(" + ",".join(map(str, self.degrees)) + ")"

    def __contains__(self, d):
        return d in self.degrees


def _norm(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce_mod_p(f: IntPoly | Sequence[int], p: int) -> PrimePoly:
    _check_prime(p)
    coeffs = f.coeffs if isinstance(f, IntPoly) else tuple(f)
    if coeffs[-1] % p == 0:
        raise BadPrime(f"{p} divides the leading coefficient")
    return PrimePoly(p, tuple(c % p for c in coeffs))


# ---------------------------------------------------------------- F_p[x] arithmetic

def _monic(a: list[int], p: int) -> list[int]:
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _mod(a: list[int], m: list[int], p: int) -> list[int]:
    """a mod m for monic m."""
    a = list(a)
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            base = k - dm
            for i in range(dm):
                a[base + i] = (a[base + i] - c * m[i]) % p
        a[k] = 0
    return _norm(a[:dm] if len(a) > dm else a)


def _mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _mod([c % p for c in prod], m, p)


def _powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _mod(a, m, p)
    while e:
        if e & 1:
            result = _mulmod(result, base, m, p)
        e >>= 1
        if e:
            base = _mulmod(base, base, m, p)
    return result


def _sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _norm([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            q[k - db] = c
            for i, bc in enumerate(b):
                a[k - db + i] = (a[k - db + i] - c * bc) % p
    return _norm(q), _norm(a[:db])


def _gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _norm(list(a)), _norm(list(b))
    while b:
        a, b = b, _divmod(a, b, p)[1]
    return _monic(a, p) if a else a


def _derivative(a: list[int], p: int) -> list[int]:
    return _norm([j * c % p for j, c in enumerate(a)][1:])


def _eval(a: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


# ---------------------------------------------------------------- public operations

def is_squarefree_mod_p(g: PrimePoly) -> bool:
    if g.degree < 1:
        raise ValueError("degree must be at least 1")
    p = g.modulus
    a = list(g.coefficients)
    da = _derivative(a, p)
    if not da:
        # g is a p-th power of a nonconstant polynomial
        return False
    return len(_gcd(a, da, p)) == 1


def _ddf_degrees(a: list[int], p: int) -> list[int]:
    f = _monic(a, p)
    degrees: list[int] = []
    h = [0, 1]
    i = 1
    while len(f) - 1 >= 2 * i:
        h = _powmod(h, p, f, p)
        g = _gcd(f, _sub(h, [0, 1], p), p)
        dg = len(g) - 1
        if dg > 0:
            # the stratum holds only degree-i factors, so its size is dg / i
            degrees.extend([i] * (dg // i))
            f = _divmod(f, g, p)[0]
            h = _mod(h, f, p)
        i += 1
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return degrees


def factor_degrees_mod_p(g: PrimePoly) -> CycleType:
    """Degrees of the irreducible factors of a squarefree g (distinct-degree factorization)."""
    if not is_squarefree_mod_p(g):
        raise NotSquarefree(f"reduction mod {g.modulus} is not squarefree")
    return CycleType(tuple(_ddf_degrees(list(g.coefficients), g.modulus)))


def roots_mod_p(g: PrimePoly) -> list[int]:
    """Distinct roots in F_p, ascending (exhaustive; meant for small p)."""
    p = g.modulus
    a = list(g.coefficients)
    return [x for x in range(p) if _eval(a, x, p) == 0]


def hensel_lift_root(coeffs: Sequence[int], r: int, p: int, bound: int) -> tuple[int, int]:
    """Lift a simple root r mod p of an integer polynomial until the modulus exceeds bound."""
    deriv = [j * c for j, c in enumerate(coeffs)][1:]
    mod = p
    while mod <= bound:
        mod = mod * mod
        fr = _eval(coeffs, r, mod)
        dr = _eval(deriv, r, mod)
        r = (r - fr * pow(dr, -1, mod)) % mod
    return r, mod
