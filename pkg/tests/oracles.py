"""Slow, obviously-correct reference implementations used only by the tests.

None of these import the package's own algorithms; they share nothing with
the code under test beyond Python's Fraction.
"""
from __future__ import annotations

import functools
import itertools
from fractions import Fraction
from math import factorial


def vp_factorial_brute(n: int, p: int) -> int:
    count = 0
    for k in range(2, n + 1):
        while k % p == 0:
            k //= p
            count += 1
    return count


def vp_brute(r: Fraction, p: int) -> int:
    num, den = r.numerator, r.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def lower_hull_brute(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertices of the lower hull: points not on or above any chord between two others."""
    pts = sorted(points)
    verts = []
    for i, (x, y) in enumerate(pts):
        keep = True
        for a, b in itertools.combinations(pts, 2):
            (x1, y1), (x2, y2) = a, b
            if x1 < x < x2:
                # chord height at x, exact
                h = Fraction(y1) + Fraction(y2 - y1, x2 - x1) * (x - x1)
                if y >= h:
                    keep = False
                    break
        if keep:
            verts.append((x, y))
    return verts


def det(matrix: list[list[Fraction]]) -> Fraction:
    """Gaussian elimination over Q."""
    m = [list(map(Fraction, row)) for row in matrix]
    n = len(m)
    sign = 1
    total = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        total *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return sign * total


def sylvester_resultant(f: list[int], g: list[int]) -> int:
    """Resultant from the Sylvester matrix; coefficients ascending."""
    a, b = list(reversed(f)), list(reversed(g))
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    if size == 0:
        return 1
    rows = []
    for i in range(n):
        rows.append([0] * i + a + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + b + [0] * (size - n - 1 - i))
    return int(det(rows))


# ---------------------------------------------------------------- F_p by trial division

def _polymod(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b) and any(a):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        while a and a[-1] == 0:
            a.pop()
    return tuple(a)


def _polydiv(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        a.pop()
    return tuple(q)


def monic_polys(p: int, d: int):
    for tail in itertools.product(range(p), repeat=d):
        yield tuple(tail) + (1,)


@functools.lru_cache(maxsize=None)
def irreducibles(p: int, d: int) -> list[tuple[int, ...]]:
    """Monic irreducibles of degree d over F_p, by exhaustive trial division."""
    out = []
    for f in monic_polys(p, d):
        if all(
            _polymod(f, g, p) != ()
            for e in range(1, d // 2 + 1)
            for g in monic_polys(p, e)
        ):
            out.append(f)
    return out


def factor_degrees_brute(coeffs: list[int], p: int) -> list[int]:
    """Degrees of the irreducible factors (with multiplicity) by repeated trial division."""
    f = tuple(c % p for c in coeffs)
    inv = pow(f[-1], -1, p)
    f = tuple(c * inv % p for c in f)
    degrees = []
    d = 1
    while len(f) > 1:
        if 2 * d > len(f) - 1:
            # no factor of degree <= deg/2, so what is left is irreducible
            degrees.append(len(f) - 1)
            break
        divided = False
        for g in irreducibles(p, d):
            if _polymod(f, g, p) == ():
                f = _polydiv(f, g, p)
                degrees.append(d)
                divided = True
                break
        if not divided:
            d += 1
    return sorted(degrees)


# ---------------------------------------------------------------- Krawtchouk / Jacobi

def binom(x: Fraction, j: int) -> Fraction:
    out = Fraction(1)
    for i in range(j):
        out *= Fraction(x) - i
    return out / factorial(j)


def krawtchouk_value(n: int, t: Fraction, x: Fraction) -> Fraction:
    """Three-term recurrence (k+1) K_{k+1} = (t - 2x) K_k - (t - k + 1) K_{k-1}."""
    t, x = Fraction(t), Fraction(x)
    prev, cur = Fraction(1), t - 2 * x
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, ((t - 2 * x) * cur - (t - k + 1) * prev) / (k + 1)
    return cur


def jacobi_value(n: int, alpha: Fraction, beta: Fraction, x: Fraction) -> Fraction:
    """P_n^(alpha, beta)(x) from the standard three-term recurrence."""
    a, b, x = Fraction(alpha), Fraction(beta), Fraction(x)
    p0 = Fraction(1)
    if n == 0:
        return p0
    p1 = (a + 1) + (a + b + 2) * (x - 1) / 2
    for k in range(2, n + 1):
        c = 2 * k + a + b
        a1 = 2 * k * (k + a + b) * (c - 2)
        if a1 == 0:
            raise ZeroDivisionError("degenerate Jacobi parameters")
        a2 = (c - 1) * (a * a - b * b)
        a3 = (c - 2) * (c - 1) * c
        a4 = 2 * (k + a - 1) * (k + b - 1) * c
        p0, p1 = p1, ((a2 + a3 * x) * p1 - a4 * p0) / a1
    return p1
