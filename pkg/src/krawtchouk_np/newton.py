"""p-adic Newton polygons, degree-based shapes and Eisenstein/Dumas certificates.

Orientation: for f = sum a_j x^j of degree n the polygon is the lower convex
hull of the points (n - j, v_p(a_j)).  The leading coefficient sits at
abscissa 0 and the constant term at abscissa n, so the polygons of the
Krawtchouk family slope downward from left to right.  Most references use the
mirrored convention (j, v_p(a_j)).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Optional

from .algebra import (
    INFINITY,
    RatPoly,
    Valuation,
    _check_prime,
    _vp_int,
    primes_up_to,
    primitive_integer_form,
    vp,
)
from .krawtchouk import krawtchouk_poly


@dataclass(frozen=True)
class Segment:
    slope: Fraction
    length: int

    def to_json(self) -> dict:
        s = self.slope
        return {"slope": f"{s.numerator}/{s.denominator}", "length": self.length}


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower hull vertices, x strictly increasing from 0.

    ``zero_root_multiplicity`` is the power of x dividing f; the hull is that
    of f / x^k, so its last abscissa is deg f - k.
    """

    prime: int
    vertices: tuple[tuple[int, int], ...]
    zero_root_multiplicity: int = 0

    @property
    def segments(self) -> tuple[Segment, ...]:
        out = []
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            out.append(Segment(Fraction(y1 - y0, x1 - x0), x1 - x0))
        return tuple(out)

    @property
    def width(self) -> int:
        return self.vertices[-1][0]

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "orientation": "(deg f - j, v_p(a_j)); leading coefficient at x=0",
            "vertices": [list(v) for v in self.vertices],
            "segments": [s.to_json() for s in self.segments],
            "zero_root_multiplicity": self.zero_root_multiplicity,
        }


def coefficient_valuations(f: RatPoly, p: int) -> list[tuple[int, Valuation]]:
    """[(j, v_p(a_{n-j})) for j = 0..n], INFINITY entries included."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    n = f.degree
    return [(j, vp(f[n - j], p)) for j in range(n + 1)]


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertices of the lower convex hull of points with distinct abscissae."""
    pts = sorted(points)
    hull: list[tuple[int, int]] = []
    for pt in pts:
        # pop while the turn is not strictly counter-clockwise (drops collinear points)
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


def newton_polygon(f: RatPoly, p: int) -> NewtonPolygon:
    if f.is_zero():
        raise ValueError("Newton polygon of the zero polynomial")
    _check_prime(p)
    n = f.degree
    k = 0
    while f[k] == 0:
        k += 1
    points = [(n - j, vp(f[j], p)) for j in range(k, n + 1) if f[j] != 0]
    return NewtonPolygon(p, tuple(lower_hull(points)), k)


def newton_polygon_int(coeffs, p: int) -> NewtonPolygon:
    """Same polygon for integer coefficients; p is trusted to be prime."""
    n = len(coeffs) - 1
    k = 0
    while coeffs[k] == 0:
        k += 1
    points = [(n - j, _vp_int(c, p)) for j, c in enumerate(coeffs) if j >= k and c != 0]
    return NewtonPolygon(p, tuple(lower_hull(points)), k)


# ---------------------------------------------------------------- degree-based shape

@dataclass(frozen=True)
class DegreeBasedShape:
    exponents: tuple[int, ...]

    @property
    def segments(self) -> tuple[Segment, ...]:
        return tuple(Segment(Fraction(-1, 2 ** j), 2 ** j) for j in self.exponents)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(2 ** j for j in self.exponents)

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(-1, 2 ** j) for j in self.exponents)


def binary_exponents(n: int) -> tuple[int, ...]:
    return tuple(j for j in range(n.bit_length()) if n >> j & 1)


def degree_based_shape(n: int) -> DegreeBasedShape:
    if n < 1:
        raise ValueError("n must be positive")
    return DegreeBasedShape(binary_exponents(n))


def is_degree_based(f: RatPoly) -> bool:
    """True iff NP_2(f) has exactly the segments dictated by the binary digits of deg f."""
    if f.degree < 1:
        raise ValueError("degree must be at least 1")
    poly = newton_polygon(f, 2)
    if poly.zero_root_multiplicity:
        return False
    return poly.segments == degree_based_shape(f.degree).segments


def distinguished_valuations(n: int, t) -> list[tuple[int, Valuation]]:
    """(u_r, v_2(a_{n - u_r})) with u_r the partial sums of the binary digits of n."""
    if n < 1:
        raise ValueError("n must be positive")
    f = krawtchouk_poly(n, t)
    out = []
    u = 0
    out.append((u, vp(f[n - u], 2)))
    for j in binary_exponents(n):
        u += 2 ** j
        out.append((u, vp(f[n - u], 2)))
    return out


# ---------------------------------------------------------------- certificates

class EisensteinKind(enum.Enum):
    DIRECT = "EisensteinDirect"
    REVERSED = "EisensteinReversed"


@dataclass(frozen=True)
class EisensteinCertificate:
    kind: EisensteinKind
    prime: int

    def __str__(self):
        return f"{self.kind.value}@{self.prime}"


def _eisenstein(coeffs, p: int) -> bool:
    lead, const = coeffs[-1], coeffs[0]
    return (
        lead % p != 0
        and all(c % p == 0 for c in coeffs[:-1])
        and const % (p * p) != 0
    )


def eisenstein_certificate(f: RatPoly, p: int) -> Optional[EisensteinCertificate]:
    """Eisenstein test at p on the primitive integer form and on its reversal."""
    if f.degree < 1:
        raise ValueError("degree must be at least 1")
    _check_prime(p)
    return eisenstein_int(primitive_integer_form(f).coeffs, p)


def eisenstein_int(coeffs, p: int) -> Optional[EisensteinCertificate]:
    if _eisenstein(coeffs, p):
        return EisensteinCertificate(EisensteinKind.DIRECT, p)
    # reversal preserves irreducibility only when the constant term is nonzero
    if coeffs[0] != 0 and _eisenstein(coeffs[::-1], p):
        return EisensteinCertificate(EisensteinKind.REVERSED, p)
    return None


def _segment_units(np_: NewtonPolygon) -> list[tuple[int, int]]:
    """(step, count) per segment: factor contributions are multiples of step."""
    units = []
    for seg in np_.segments:
        step = seg.slope.denominator
        units.append((step, seg.length // step))
    return units


def factor_degree_set(np_: NewtonPolygon) -> frozenset[int]:
    """Every degree a factor of f could have, given this polygon (Dumas)."""
    sums = {0}
    for step, count in _segment_units(np_):
        sums = {s + k * step for s in sums for k in range(count + 1)}
    z = np_.zero_root_multiplicity
    return frozenset(s + k for s in sums for k in range(z + 1))


def np_factor_constraints(np_: NewtonPolygon) -> frozenset[tuple[int, ...]]:
    """Degree multisets (sorted tuples) compatible with the polygon.

    A factor takes, from every segment, a multiple of that segment's lattice
    step; the pieces taken by all factors add up to the segment.  Linear
    factors x contributed by a root at 0 are appended as parts of size 1.
    """
    units = tuple(_segment_units(np_))
    steps = tuple(s for s, _ in units)
    counts = tuple(c for _, c in units)
    results: set[tuple[int, ...]] = set()

    @lru_cache(maxsize=None)
    def split(remaining: tuple[int, ...], floor: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
        # multisets of nonzero vectors summing to `remaining`, each vector >= floor
        # (lexicographically), so every multiset is produced once
        if not any(remaining):
            return frozenset({()})
        out = set()
        for vec in _vectors_upto(remaining):
            if not any(vec) or vec < floor:
                continue
            rest = tuple(r - v for r, v in zip(remaining, vec))
            deg = sum(v * s for v, s in zip(vec, steps))
            for tail in split(rest, vec):
                out.add(tuple(sorted((deg,) + tail)))
        return frozenset(out)

    for combo in split(counts, tuple(0 for _ in counts)):
        results.add(tuple(sorted(combo + (1,) * np_.zero_root_multiplicity)))
    return frozenset(results)


def _vectors_upto(bound: tuple[int, ...]):
    if not bound:
        yield ()
        return
    for head in range(bound[0] + 1):
        for tail in _vectors_upto(bound[1:]):
            yield (head,) + tail


def certifies_irreducible(np_: NewtonPolygon) -> bool:
    """Polygon alone forces irreducibility (only the multiset {n})."""
    return factor_degree_set(np_) & set(range(1, np_.width + np_.zero_root_multiplicity)) == set()


@dataclass(frozen=True)
class NewtonIndex:
    index: int
    contributions: dict = field(default_factory=dict)  # prime -> lcm of its slope denominators
    prime_bound: int = 0


def newton_index(f: RatPoly, prime_bound: int) -> NewtonIndex:
    """lcm of slope denominators over the primes p <= prime_bound.

    A truncation: the full index ranges over all primes.
    """
    if f.degree < 1:
        raise ValueError("degree must be at least 1")
    if prime_bound < 2:
        raise ValueError("prime_bound must be at least 2")
    total = 1
    contrib = {}
    for p in primes_up_to(prime_bound):
        local = 1
        for seg in newton_polygon(f, p).segments:
            local = lcm(local, seg.slope.denominator)
        if local > 1:
            contrib[p] = local
            total = lcm(total, local)
    return NewtonIndex(total, contrib, prime_bound)


def polygon_json(f: RatPoly, p: int = 2) -> dict:
    poly = newton_polygon(f, p)
    out = poly.to_json()
    out["degree_based"] = is_degree_based(f) if p == 2 and f.degree >= 1 else None
    return out


__all__ = [
    "INFINITY",
    "NewtonPolygon",
    "Segment",
    "DegreeBasedShape",
    "EisensteinKind",
    "EisensteinCertificate",
    "NewtonIndex",
    "coefficient_valuations",
    "newton_polygon",
    "newton_polygon_int",
    "eisenstein_int",
    "lower_hull",
    "degree_based_shape",
    "is_degree_based",
    "distinguished_valuations",
    "eisenstein_certificate",
    "np_factor_constraints",
    "factor_degree_set",
    "certifies_irreducible",
    "newton_index",
    "polygon_json",
]
