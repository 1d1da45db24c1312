"""Vectorised Galois scans for many specialisations of one underlying family.

Two speedups over calling ``galois_scan`` per point, both exact:

* the coefficients of the underlying polynomial are polynomials in t, recovered
  once per (m, delta) by interpolation, so a specialisation t = a/b costs a
  homogeneous integer evaluation;
* for p > m the factor-degree multiset of g mod p is read off the traces of
  the powers of the Frobenius matrix Q of F_p[x]/(g).  Frobenius acts on each
  F_{p^e} summand as a cyclic shift of a normal basis, so
  tr(Q^k) = #{roots of g in F_{p^k}} = sum_{e | k} e c_e, which is < p and
  hence recovered exactly from its residue.  Mobius inversion gives c_e.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence

import numpy as np

from .algebra import IntPoly, int_discriminant, primes_up_to
from .galois import GaloisReport, SieveBudget, assemble_report
from .krawtchouk import underlying_poly
from .modp import CycleType, _ddf_degrees

# float64 matmul is exact while m * (p + 1)^2 < 2^53
_MAX_BATCH_PRIME = 1 << 24


def _interpolate(xs: Sequence[int], ys: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients (ascending) of the interpolating polynomial, Newton form."""
    n = len(xs)
    dd = list(ys)
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k])
    coeffs = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # coeffs <- coeffs * (x - xs[i]) + dd[i]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - xs[i] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += dd[i]
    return coeffs


@lru_cache(maxsize=None)
def underlying_family(m: int, delta: int) -> tuple[tuple[tuple[int, ...], ...], int]:
    """(E, L): integer table with L * coeff_i(t) = sum_k E[i][k] t^k, L > 0.

    Every coefficient of the underlying polynomial has degree <= 2m + delta in t,
    so 2m + delta + 1 samples determine it.
    """
    n = 2 * m + delta
    xs = list(range(n + 1))
    samples = [underlying_poly(m, delta, x) for x in xs]
    rows = [_interpolate(xs, [s[i] for s in samples]) for i in range(m + 1)]
    den = lcm(*(c.denominator for row in rows for c in row))
    return tuple(tuple(int(c * den) for c in row) for row in rows), den


def family_member(m: int, delta: int, t: Fraction) -> IntPoly:
    """Primitive integer form of the underlying polynomial at t."""
    table, den = underlying_family(m, delta)
    a, b = t.numerator, t.denominator
    d = len(table[0]) - 1
    apow = [1] * (d + 1)
    bpow = [1] * (d + 1)
    for k in range(1, d + 1):
        apow[k] = apow[k - 1] * a
        bpow[k] = bpow[k - 1] * b
    coeffs = [sum(e * apow[k] * bpow[d - k] for k, e in enumerate(row) if e) for row in table]
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if coeffs[-1] < 0:
        g = -g
    return IntPoly(tuple(c // g for c in coeffs), Fraction(g, den * b ** d))


# ---------------------------------------------------------------- vectorised F_p[x]

@lru_cache(maxsize=64)
def _inverse_table(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for i in range(1, p):
        inv[i] = pow(i, -1, p)
    return inv


def _mulmod_batch(a: np.ndarray, b: np.ndarray, g: np.ndarray, p: int) -> np.ndarray:
    """Rowwise a*b mod (x^m + g), all arrays (R, m) with entries in [0, p)."""
    R, m = a.shape
    prod = np.zeros((R, 2 * m - 1), dtype=np.int64)
    for i in range(m):
        prod[:, i : i + m] += a[:, i : i + 1] * b
    # only the column being eliminated is reduced; the others stay below 2 m p^2 in size
    for k in range(2 * m - 2, m - 1, -1):
        c = prod[:, k] % p
        prod[:, k - m : k] -= c[:, None] * g
    return prod[:, :m] % p


def _cycle_counts_batch(rows: np.ndarray, p: int) -> np.ndarray:
    """c[r, e-1] = number of degree-e factors of row r mod p.  Needs p > m, rows squarefree."""
    R, width = rows.shape
    m = width - 1
    inv = _inverse_table(p)[rows[:, -1]]
    g = rows[:, :m] * inv[:, None] % p
    if m == 1:
        return np.ones((R, 1), dtype=np.int64)
    x = np.zeros((R, m), dtype=np.int64)
    x[:, 1] = 1
    # xp = x^p mod g
    result = np.zeros((R, m), dtype=np.int64)
    result[:, 0] = 1
    base, e = x, p
    while e:
        if e & 1:
            result = _mulmod_batch(result, base, g, p)
        e >>= 1
        if e:
            base = _mulmod_batch(base, base, g, p)
    xp = result
    Q = np.zeros((R, m, m), dtype=np.int64)
    Q[:, 0, 0] = 1
    cur = Q[:, 0, :].copy()
    for i in range(1, m):
        cur = _mulmod_batch(cur, xp, g, p)
        Q[:, i, :] = cur
    Qf = Q.astype(np.float64)
    M = Qf
    roots = np.zeros((R, m + 1), dtype=np.int64)
    for k in range(1, m + 1):
        roots[:, k] = np.rint(np.trace(M, axis1=1, axis2=2)).astype(np.int64) % p
        if k < m:
            # cheap reduction: entries land in [0, p] up to rounding, still exact below 2^53
            M = M @ Qf
            M -= p * np.floor(M * (1.0 / p))
    counts = np.zeros((R, m), dtype=np.int64)
    for e in range(1, m + 1):
        acc = np.zeros(R, dtype=np.int64)
        for d in range(1, e + 1):
            if e % d == 0:
                mu = _mobius(e // d)
                if mu:
                    acc += mu * roots[:, d]
        counts[:, e - 1] = acc // e
    return counts


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    result, q = 1, 2
    while q * q <= n:
        if n % q == 0:
            n //= q
            if n % q == 0:
                return 0
            result = -result
        q += 1
    return -result if n > 1 else result


def batch_cycle_types(
    polys: Sequence[IntPoly], discs: Sequence[int], primes: Sequence[int]
) -> list[list[tuple[int, CycleType]]]:
    """Per polynomial, the (p, cycle type) list over the good primes, ascending."""
    out: list[list[tuple[int, CycleType]]] = [[] for _ in polys]
    if not polys:
        return out
    m = polys[0].degree
    if any(F.degree != m for F in polys):
        raise ValueError("batch polynomials must share a degree")
    for p in primes:
        good = [i for i, (F, d) in enumerate(zip(polys, discs)) if F.coeffs[-1] % p and d % p]
        if not good:
            continue
        if p <= m or p >= _MAX_BATCH_PRIME:
            for i in good:
                ct = CycleType(tuple(_ddf_degrees([c % p for c in polys[i].coeffs], p)))
                out[i].append((p, ct))
            continue
        rows = np.array([[c % p for c in polys[i].coeffs] for i in good], dtype=np.int64)
        counts = _cycle_counts_batch(rows, p)
        for row, i in zip(counts.tolist(), good):
            degrees = tuple(e + 1 for e, c in enumerate(row) for _ in range(c))
            out[i].append((p, CycleType(degrees)))
    return out


def batch_galois_scan(
    polys: Sequence[IntPoly], prime_bound: int, budget: SieveBudget | None = None
) -> list[GaloisReport]:
    """Same reports as ``[galois_scan(F, prime_bound) for F in polys]``."""
    polys = list(polys)
    primes = primes_up_to(prime_bound)
    budget = budget or SieveBudget(prime_bound=prime_bound)
    discs = [int_discriminant(F) for F in polys]
    reports = []
    by_degree: dict[int, list[int]] = {}
    for i, F in enumerate(polys):
        by_degree.setdefault(F.degree, []).append(i)
    cts: list = [None] * len(polys)
    for idx in by_degree.values():
        group = batch_cycle_types([polys[i] for i in idx], [discs[i] for i in idx], primes)
        for i, ct in zip(idx, group):
            cts[i] = ct
    for F, disc, ct in zip(polys, discs, cts):
        reports.append(assemble_report(F, disc, primes, ct, budget))
    return reports
