"""Galois-group evidence: irreducibility sieve, Dedekind cycle-type sampling,
Jordan's criterion and discriminant square tests."""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebra import (
    IntPoly,
    RatPoly,
    _vp_int,
    int_discriminant,
    is_prime,
    is_rational_square,
    poly_derivative,
    poly_divmod,
    poly_eval,
    poly_gcd,
    primes_up_to,
    primitive_integer_form,
)
from .krawtchouk import krawtchouk_poly
from .modp import CycleType, PrimePoly, _ddf_degrees, hensel_lift_root, roots_mod_p
from .newton import eisenstein_int, factor_degree_set, newton_polygon_int


class DegreeTooSmall(ValueError):
    pass


class Status(str, enum.Enum):
    REDUCIBLE = "REDUCIBLE"
    CONTAINS_ALTERNATING = "CONTAINS_ALTERNATING"
    FULL_SYMMETRIC = "FULL_SYMMETRIC"
    INCONCLUSIVE = "INCONCLUSIVE"


class Verdict(str, enum.Enum):
    IRREDUCIBLE = "IRREDUCIBLE"
    REDUCIBLE = "REDUCIBLE"
    UNKNOWN = "UNKNOWN"


def jordan_range(n: int) -> list[int]:
    """Primes l with n/2 < l < n - 2."""
    if n < 8:
        raise DegreeTooSmall(f"Jordan's criterion needs degree >= 8, got {n}")
    return [l for l in primes_up_to(n - 3) if 2 * l > n]


def _as_intpoly(f) -> IntPoly:
    if isinstance(f, IntPoly):
        return f
    if isinstance(f, RatPoly):
        return primitive_integer_form(f)
    return primitive_integer_form(RatPoly(f))


# ---------------------------------------------------------------- rational roots

def rational_roots(f: IntPoly | RatPoly) -> list[Fraction]:
    """All rational roots, ascending, by Hensel lifting at a good small prime."""
    g = f.as_ratpoly() if isinstance(f, IntPoly) else f
    if g.degree < 1:
        return []
    roots = []
    if g[0] == 0:
        roots.append(Fraction(0))
        k = next(j for j, c in enumerate(g.coeffs) if c != 0)
        g = RatPoly(g.coeffs[k:])
        if g.degree < 1:
            return roots
    common = poly_gcd(g, poly_derivative(g))
    if common.degree > 0:
        g = poly_divmod(g, common)[0]
    F = primitive_integer_form(g).coeffs
    lc, a0 = F[-1], F[0]
    disc = int_discriminant(F)
    p = next(q for q in range(3, 10**6) if is_prime(q) and lc % q and disc % q)
    bound = 2 * abs(lc) * abs(a0)
    for r in roots_mod_p(PrimePoly(p, tuple(c % p for c in F))):
        lifted, mod = hensel_lift_root(F, r, p, bound)
        c = lc * lifted % mod
        if c > mod // 2:
            c -= mod
        cand = Fraction(c, lc)
        if poly_eval(g, cand) == 0:
            roots.append(cand)
    return sorted(roots)


# ---------------------------------------------------------------- sieve

@dataclass(frozen=True)
class SieveBudget:
    """Primes used by the irreducibility sieve."""

    prime_bound: int = 200
    local_bound: int = 50  # Eisenstein and Newton-polygon primes


@dataclass(frozen=True)
class SieveResult:
    verdict: Verdict
    certificate: str = ""
    witness: Optional[RatPoly] = None

    def __str__(self):
        return f"{self.verdict.value}({self.certificate})" if self.certificate else self.verdict.value


def subset_sums(parts: Sequence[int]) -> set[int]:
    sums = {0}
    for d in parts:
        sums |= {s + d for s in sums}
    return sums


def _good_cycle_types(F: IntPoly, disc: int, primes: Iterable[int]) -> list[tuple[int, CycleType]]:
    lc = F.coeffs[-1]
    out = []
    for p in primes:
        if lc % p == 0 or disc % p == 0:
            continue
        out.append((p, CycleType(tuple(_ddf_degrees([c % p for c in F.coeffs], p)))))
    return out


def _sieve(F: IntPoly, disc: int, budget: SieveBudget, cycle_types) -> SieveResult:
    n = F.degree
    if n == 1:
        return SieveResult(Verdict.IRREDUCIBLE, "linear")
    f = F.as_ratpoly()
    if F.coeffs[0] == 0:
        return SieveResult(Verdict.REDUCIBLE, "root 0", RatPoly([0, 1]))
    if disc == 0:
        return SieveResult(Verdict.REDUCIBLE, "repeated factor", poly_gcd(f, poly_derivative(f)))

    coeffs = F.coeffs
    feasible = set(range(1, n))
    local = primes_up_to(budget.local_bound)
    for p in local:
        cert = eisenstein_int(coeffs, p)
        if cert is not None:
            return SieveResult(Verdict.IRREDUCIBLE, str(cert))
    for p in local:
        feasible &= factor_degree_set(newton_polygon_int(coeffs, p))
        if not feasible:
            return SieveResult(Verdict.IRREDUCIBLE, f"Dumas@{p}")

    if cycle_types is None:
        cycle_types = _good_cycle_types(F, disc, primes_up_to(budget.prime_bound))
    for p, ct in cycle_types:
        if ct.degrees == (n,):
            return SieveResult(Verdict.IRREDUCIBLE, f"irreducible mod {p}")
        feasible &= subset_sums(ct.degrees)
        if not feasible:
            return SieveResult(Verdict.IRREDUCIBLE, f"degree sets to {p}")

    roots = rational_roots(F)
    if roots:
        r = roots[0]
        return SieveResult(Verdict.REDUCIBLE, f"root {r}", RatPoly([-r, 1]))
    if n <= 3:
        return SieveResult(Verdict.IRREDUCIBLE, "no rational root")
    return SieveResult(Verdict.UNKNOWN)


def irreducibility_sieve(f, budget: SieveBudget = SieveBudget()) -> SieveResult:
    """IRREDUCIBLE only with a certificate; REDUCIBLE only with an explicit factor."""
    F = _as_intpoly(f)
    if F.degree < 1:
        raise ValueError("degree must be at least 1")
    return _sieve(F, int_discriminant(F), budget, None)


# ---------------------------------------------------------------- group evidence

def _isolate(ct: CycleType, ell: int) -> bool:
    """Some power of an element of this cycle type is a single ell-cycle (ell prime)."""
    return ct.degrees.count(ell) == 1 and all(d % ell for d in ct.degrees if d != ell)


def _small_degree_witness(n: int, cycle_types) -> tuple[bool, str]:
    """Does a transitive group with these cycle types contain A_n?  For n <= 7."""
    if n <= 3:
        return True, f"transitive subgroups of S_{n} contain A_{n}"
    types = [ct for _, ct in cycle_types]
    primitive = is_prime(n) or any(ct.degrees == (1, n - 1) for ct in types) or any(
        is_prime(d) and 2 * d > n for ct in types for d in ct.degrees
    )
    if not primitive:
        return False, ""
    if any(_isolate(ct, 2) for ct in types):
        return True, "primitive with a transposition"
    for ct in types:
        for ell in sorted(set(ct.degrees)):
            # Jordan (1873): primitive + l-cycle with l <= n - 3 contains A_n; l = 3 always works
            if ell > 2 and is_prime(ell) and (ell == 3 or ell <= n - 3) and _isolate(ct, ell):
                return True, f"primitive with a {ell}-cycle"
    return False, ""


@dataclass(frozen=True)
class GaloisReport:
    degree: int
    status: Status
    jordan_prime: Optional[int]
    witnesses: tuple[tuple[int, CycleType], ...]
    disc_square: bool
    primes_sampled: int
    primes_skipped: tuple[int, ...] = ()
    disc_valuations: dict = field(default_factory=dict)
    sieve: Optional[SieveResult] = None
    group_certificate: str = ""

    def __post_init__(self):
        if self.status is Status.FULL_SYMMETRIC and self.disc_square:
            raise AssertionError("FULL_SYMMETRIC with a square discriminant")

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "status": self.status.value,
            "jordan_prime": self.jordan_prime,
            "primes_sampled": self.primes_sampled,
            "primes_skipped": list(self.primes_skipped),
            "witnesses": [{"p": p, "cycle_type": list(ct.degrees)} for p, ct in self.witnesses],
            "disc_square": self.disc_square,
            "disc_valuations": {str(p): v for p, v in self.disc_valuations.items()},
            "sieve": str(self.sieve) if self.sieve else None,
            "group_certificate": self.group_certificate,
        }


def classify(
    n: int, sieve: SieveResult, cycle_types, disc_square: bool
) -> tuple[Status, Optional[int], str]:
    """Status, Jordan prime and group certificate from the gathered evidence."""
    if sieve.verdict is Verdict.REDUCIBLE:
        return Status.REDUCIBLE, None, ""
    if sieve.verdict is Verdict.UNKNOWN:
        return Status.INCONCLUSIVE, None, ""
    jordan_prime = None
    if n >= 8:
        window = set(jordan_range(n))
        for _, ct in cycle_types:
            hit = [d for d in ct.degrees if d in window]
            if hit:
                jordan_prime = hit[0]
                break
        contains, reason = jordan_prime is not None, (
            f"Jordan: {jordan_prime}-cycle" if jordan_prime else ""
        )
    else:
        contains, reason = _small_degree_witness(n, cycle_types)
    if not contains:
        return Status.INCONCLUSIVE, None, ""
    if disc_square:
        return Status.CONTAINS_ALTERNATING, jordan_prime, reason
    return Status.FULL_SYMMETRIC, jordan_prime, reason


def galois_scan(
    f,
    prime_bound: int,
    budget: Optional[SieveBudget] = None,
    sample: Optional[int] = None,
    seed: Optional[int] = None,
) -> GaloisReport:
    """Dedekind sampling over the primes p <= prime_bound.

    ``sample`` draws that many primes at random (reproducible through ``seed``)
    instead of the exhaustive default.
    """
    F = _as_intpoly(f)
    if F.degree < 1:
        raise ValueError("degree must be at least 1")
    disc = int_discriminant(F)
    primes = primes_up_to(prime_bound)
    if sample is not None:
        if seed is None:
            raise ValueError("random prime sampling needs an explicit seed")
        primes = sorted(random.Random(seed).sample(primes, min(sample, len(primes))))
    cycle_types = _good_cycle_types(F, disc, primes)
    return assemble_report(F, disc, primes, cycle_types, budget or SieveBudget(prime_bound=prime_bound))


def assemble_report(
    F: IntPoly, disc: int, primes: Sequence[int], cycle_types, budget: SieveBudget
) -> GaloisReport:
    """Build the report from precomputed cycle types (ascending by prime)."""
    n = F.degree
    good = {p for p, _ in cycle_types}
    skipped = tuple(p for p in primes if p not in good)
    sieve = _sieve(F, disc, budget, cycle_types)
    disc_square = is_rational_square(disc)
    status, jordan_prime, reason = classify(n, sieve, cycle_types, disc_square)
    disc_vals = {p: _vp_int(disc, p) for p in skipped if disc}
    return GaloisReport(
        degree=n,
        status=status,
        jordan_prime=jordan_prime,
        witnesses=tuple(cycle_types),
        disc_square=disc_square,
        primes_sampled=len(cycle_types),
        primes_skipped=skipped,
        disc_valuations=disc_vals,
        sieve=sieve,
        group_certificate=reason,
    )


# ---------------------------------------------------------------- discriminant data

@dataclass(frozen=True)
class DiscProfile:
    discriminant: int
    valuations: tuple[tuple[int, int], ...]
    cofactor: int


def disc_valuation_profile(f, primes: Sequence[int]) -> DiscProfile:
    F = _as_intpoly(f)
    disc = int_discriminant(F)
    if disc == 0:
        raise ValueError("discriminant is zero")
    rest = disc
    vals = []
    for p in primes:
        v = _vp_int(rest, p)
        rest //= p ** v
        vals.append((p, v))
    return DiscProfile(disc, tuple(vals), rest)


def product_of_roots_relation(n: int) -> tuple[Fraction, Fraction]:
    """(constant coefficient of K_n^(-1), a_0 / a_n)."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and at least 2")
    f = krawtchouk_poly(n, -1)
    return f[0], f[0] / f[n]

