"""Reproductions and verification sweeps behind the command-line interface.

Each function returns a ``Report``: a list of named pass/fail checks plus a
JSON-serialisable ``data`` payload.  Literature values that the checks compare
against are kept as module constants.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .algebra import (
    RatPoly,
    depress,
    discriminant,
    format_rational,
    is_rational_square,
    primitive_integer_form,
    rational_sqrt,
)
from .galois import (
    Status,
    Verdict,
    disc_valuation_profile,
    galois_scan,
    irreducibility_sieve,
    product_of_roots_relation,
)
from .krawtchouk import descartes_bounds, krawtchouk_poly, underlying_poly
from .newton import (
    binary_exponents,
    coefficient_valuations,
    distinguished_valuations,
    eisenstein_certificate,
    is_degree_based,
    newton_polygon,
)

# (j, v_2(a_{19-j})) for K_19^(19), j = 0..19
NP_EXAMPLE_TABLE = (
    (0, 3), (1, 2), (2, 3), (3, 1), (4, 4), (5, 3), (6, 4), (7, 3), (8, 3), (9, 2),
    (10, 3), (11, 5), (12, 6), (13, 6), (14, 7), (15, 12), (16, 11), (17, 14), (18, 18), (19, 0),
)
NP_EXAMPLE_BREAKS = ((0, 3), (1, 2), (3, 1), (19, 0))

K20_VALUATIONS = ((2, 28), (3, 50), (5, 33), (7, 8), (2857, 1), (3371, 1))
K20_COFACTOR = 3080247982713573950046529683277689810503273830007221192065657784224004955821
K20_PRIME_BOUND = 2857
K20_INTERVAL_PRIMES = 410
K20_ORDER7_WITNESSES = 65

# depressed monic cubics x^3 + L(t) x + C(t); ascending coefficients in t
CUBIC_LINEAR = {
    0: (Fraction(-131, 6), Fraction(95, 8), Fraction(-15, 8)),
    1: (Fraction(-637, 12), Fraction(175, 8), Fraction(-21, 8)),
}
CUBIC_CONSTANT = {
    0: (Fraction(965, 27), Fraction(-325, 12), Fraction(55, 8), Fraction(-5, 8)),
    1: (Fraction(3305, 27), Fraction(-833, 12), Fraction(105, 8), Fraction(-7, 8)),
}

# points as printed, under the printed delta labels
LISTED_POINTS = {
    0: ((3, Fraction(117, 2)), (4, Fraction(165, 4)), (5, 48), (6, 120), (14, 7680)),
    1: ((2, Fraction(63, 4)), (3, Fraction(21, 2)), (4, 12), (5, 48), (12, 3072)),
}


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}{tail}"


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks],
            "data": self.data,
        }

    def lines(self) -> list[str]:
        return [self.title] + ["  " + c.line() for c in self.checks]


def _q(r) -> str:
    return format_rational(Fraction(r))


# ---------------------------------------------------------------- Newton polygon example

def repro_example_np(degree: Optional[int] = None) -> Report:
    """2-adic table and polygon of K_n^(n); n = 19 unless overridden."""
    n = 19 if degree is None else degree
    if n < 1:
        raise ValueError("degree must be positive")
    f = krawtchouk_poly(n, n)
    table = coefficient_valuations(f, 2)
    poly = newton_polygon(f, 2)
    rep = Report(f"2-adic Newton polygon of K_{n}^({n})")
    rep.data = {
        "n": n,
        "t": n,
        "table": [[j, str(v)] for j, v in table],
        "polygon": poly.to_json(),
        "degree_based": is_degree_based(f),
    }
    if degree is None:
        mismatch = next(
            (i for i, (a, b) in enumerate(zip(table, NP_EXAMPLE_TABLE)) if tuple(a) != b), None
        )
        detail = "20 rows" if mismatch is None else f"row {mismatch}: got {table[mismatch]}, expected {NP_EXAMPLE_TABLE[mismatch]}"
        rep.check("valuation table", mismatch is None and len(table) == len(NP_EXAMPLE_TABLE), detail)
        rep.check("polygon breaks", poly.vertices == NP_EXAMPLE_BREAKS, str(list(poly.vertices)))
    rep.check("degree-based", rep.data["degree_based"])
    return rep


# ---------------------------------------------------------------- theorem / corollary sweeps

def theorem_window(n: int) -> range:
    """Integer t in [n, n + 2^{j_1}) with j_1 the lowest binary digit of n."""
    return range(n, n + 2 ** binary_exponents(n)[0])


def verify_theorem(n_max: int) -> Report:
    if n_max < 1:
        raise ValueError("n_max must be positive")
    rep = Report(f"degree-based 2-adic polygons, n <= {n_max}")
    failures = []
    cases = 0
    for n in range(1, n_max + 1):
        for t in theorem_window(n):
            cases += 1
            if not is_degree_based(krawtchouk_poly(n, t)):
                failures.append([n, t])
    rep.data = {"n_max": n_max, "cases": cases, "failures": failures}
    rep.check("all windows degree-based", not failures, f"{cases} cases, {len(failures)} failures")
    return rep


def verify_distinguished(n_max: int) -> Report:
    """At t = n the partial-sum coefficients have valuations k, k-1, ..., 0 (k binary digits)."""
    rep = Report(f"distinguished valuations at t = n, n <= {n_max}")
    failures = []
    for n in range(1, n_max + 1):
        k = len(binary_exponents(n))
        got = [v for _, v in distinguished_valuations(n, n)]
        if got != list(range(k, -1, -1)):
            failures.append([n, [str(v) for v in got]])
    rep.data = {"n_max": n_max, "failures": failures}
    rep.check("valuations k - r", not failures, f"{n_max} degrees, {len(failures)} failures")
    return rep


def verify_corollary(k_max: int) -> Report:
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    rep = Report(f"Eisenstein at 2 for K_(2^k)^(t), 2^k <= t < 2^(k+1), k <= {k_max}")
    failures = []
    kinds = {}
    cases = 0
    for k in range(k_max + 1):
        n = 2 ** k
        for t in range(n, 2 * n):
            cases += 1
            cert = eisenstein_certificate(krawtchouk_poly(n, t), 2)
            if cert is None:
                failures.append([k, t])
            else:
                kinds[cert.kind.value] = kinds.get(cert.kind.value, 0) + 1
    rep.data = {"k_max": k_max, "cases": cases, "certificate_kinds": kinds, "failures": failures}
    rep.check("all certified", not failures, f"{cases} cases, {len(failures)} failures")
    return rep


def verify_prop_minus1(k_max: int) -> Report:
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    rep = Report(f"K_(2^k)^(-1), 2 <= k <= {k_max}")
    rows = []
    for k in range(2, k_max + 1):
        n = 2 ** k
        f = krawtchouk_poly(n, -1)
        cert = eisenstein_certificate(f, 2)
        const, root_product = product_of_roots_relation(n)
        pos, neg = descartes_bounds(underlying_poly(n // 2, 0, -1))
        rows.append(
            {
                "k": k,
                "certificate": str(cert) if cert else None,
                "constant_coefficient": _q(const),
                "root_product": _q(root_product),
                "descartes_positive": pos,
                "descartes_negative": neg,
            }
        )
        rep.check(f"k={k} irreducible", cert is not None, str(cert))
        rep.check(f"k={k} constant coefficient 1", const == 1, _q(const))
        rep.check(f"k={k} no positive roots of the underlying polynomial", pos == 0, f"variations {pos}")
    rep.data = {"k_max": k_max, "rows": rows}
    return rep


# ---------------------------------------------------------------- degree-20 example

def repro_k20(prime_bound: int = K20_PRIME_BOUND) -> Report:
    f = underlying_poly(10, 0, 20)
    F = primitive_integer_form(f)
    rep = Report("underlying polynomial m=10, delta=0, t=20")
    profile = disc_valuation_profile(F, [p for p, _ in K20_VALUATIONS])
    for (p, v), (_, want) in zip(profile.valuations, K20_VALUATIONS):
        rep.check(f"v_{p}(disc) = {want}", v == want, str(v))
    rep.check("cofactor", profile.cofactor == K20_COFACTOR, str(profile.cofactor))

    report = galois_scan(F, prime_bound)
    interval = [(p, ct) for p, ct in report.witnesses if 7 < p < K20_PRIME_BOUND]
    seven = [p for p, ct in interval if 7 in ct]
    rep.check("good primes in (7, 2857)", len(interval) == K20_INTERVAL_PRIMES, str(len(interval)))
    rep.check("primes with a degree-7 factor", len(seven) == K20_ORDER7_WITNESSES, str(len(seven)))
    rep.check("status FULL_SYMMETRIC", report.status is Status.FULL_SYMMETRIC, report.status.value)
    rep.data = {
        "integral_polynomial": list(F.coeffs),
        "discriminant_valuations": {str(p): v for p, v in profile.valuations},
        "cofactor": str(profile.cofactor),
        "interval_good_primes": len(interval),
        "order7_primes": seven,
        "report": report.to_json(),
    }
    return rep


# ---------------------------------------------------------------- the n = 3 example

def _eval_asc(coeffs, t) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _random_rational(rng: random.Random, bound: int = 40) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def listed_cubic(delta: int, t) -> RatPoly:
    t = Fraction(t)
    return RatPoly([_eval_asc(CUBIC_CONSTANT[delta], t), _eval_asc(CUBIC_LINEAR[delta], t), 0, 1])


def repro_depressed_cubics(samples: int = 10, seed: int = 0) -> Report:
    rng = random.Random(seed)
    rep = Report(f"depressed cubics at {samples} rational t per delta")
    mismatches = []
    ts = [Fraction(0)] + [_random_rational(rng) for _ in range(max(samples - 1, 0))]
    for delta in (0, 1):
        for t in ts:
            got = depress(underlying_poly(3, delta, t))
            if got != listed_cubic(delta, t):
                mismatches.append({"delta": delta, "t": _q(t), "got": str(got)})
    rep.data = {"t_values": [_q(t) for t in ts], "mismatches": mismatches}
    rep.check("coefficients match", not mismatches, f"{2 * len(ts)} comparisons")
    return rep


@dataclass(frozen=True)
class SexticCurve:
    """s^2 = (3/128) * sextic(t); ``coefficients`` ascending, the 3/128 folded in."""

    delta: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) != 7 or self.coefficients[-1] <= 0:
            raise ValueError("need a degree-6 polynomial with positive leading coefficient")

    def __call__(self, t) -> Fraction:
        return _eval_asc(self.coefficients, Fraction(t))

    @classmethod
    def for_delta(cls, delta: int) -> SexticCurve:
        desc = {
            0: (675, -11475, 81225, -303125, 622860, -668080, 304704),
            1: (2205, -50715, 492009, -2561825, 7539882, -11982460, 8267304),
        }[delta]
        return cls(delta, tuple(Fraction(3, 128) * c for c in reversed(desc)))


def hyperelliptic_search(delta: int, height: int) -> list[tuple[Fraction, Fraction]]:
    """(t, s) with s >= 0 and s^2 = curve(t), for reduced t of height <= ``height``."""
    if height < 1:
        raise ValueError("height must be positive")
    curve = SexticCurve.for_delta(delta)
    points = []
    for a in range(-height, height + 1):
        for b in range(1, height + 1):
            if gcd(a, b) != 1:
                continue
            t = Fraction(a, b)
            s = rational_sqrt(curve(t))
            if s is not None:
                points.append((t, s))
    points.sort()
    return points


def sextic_disc_ratio(delta: int, t) -> Optional[Fraction]:
    """curve(t) / disc(depressed cubic); None when the discriminant vanishes."""
    d = discriminant(depress(underlying_poly(3, delta, t)))
    if d == 0:
        return None
    return SexticCurve.for_delta(delta)(t) / d


def crosscheck_sextic_vs_disc(delta: int, samples: int = 20, seed: int = 0) -> Report:
    if samples < 1:
        raise ValueError("samples must be positive")
    rng = random.Random(seed)
    curve = SexticCurve.for_delta(delta)
    rep = Report(f"sextic vs discriminant, delta={delta}, {samples} samples")
    ratio = None
    bad = []
    for _ in range(samples):
        t = _random_rational(rng)
        d = discriminant(depress(underlying_poly(3, delta, t)))
        s = curve(t)
        if d == 0 or s == 0:
            if d != s:
                bad.append(_q(t))
            continue
        if ratio is None:
            ratio = s / d
        elif s / d != ratio:
            bad.append(_q(t))
    rep.data = {"delta": delta, "ratio": _q(ratio) if ratio is not None else None, "mismatches": bad}
    rep.check("ratio constant", ratio is not None and not bad, f"c^2 = {rep.data['ratio']}")
    rep.check("ratio is a square", ratio is not None and is_rational_square(ratio))
    return rep


def repro_hyperelliptic(height: int = 20) -> Report:
    """Point search on both curves, compared with the listed points."""
    rep = Report(f"rational points on the two genus-2 curves, height <= {height}")
    found = {d: hyperelliptic_search(d, height) for d in (0, 1)}
    curves = {d: SexticCurve.for_delta(d) for d in (0, 1)}

    listed_on = {}
    for d, pts in LISTED_POINTS.items():
        for t, s in pts:
            listed_on[(d, t)] = [e for e in (0, 1) if curves[e](t) == Fraction(s) ** 2]
    every_listed_point_lies_on_a_curve = all(listed_on.values())
    # t = 5 sits on both curves with the same s, so it cannot tell the labels apart
    swapped = all((1 - d) in on for (d, t), on in listed_on.items()) and any(
        d not in on for (d, t), on in listed_on.items()
    )
    rep.check("each listed (t, s) lies on one of the curves", every_listed_point_lies_on_a_curve)
    rep.data["labels_swapped"] = swapped

    found_t = sorted({t for pts in found.values() for t, _ in pts})
    listed_t = sorted({Fraction(t) for pts in LISTED_POINTS.values() for t, _ in pts})
    found_pairs = {(t, s) for pts in found.values() for t, s in pts}
    listed_pairs = {(Fraction(t), Fraction(s)) for pts in LISTED_POINTS.values() for t, s in pts}
    rep.check("listed points found", listed_pairs <= found_pairs)
    extra = sorted(found_pairs - listed_pairs)
    rep.check(
        "found t-values equal the listed ones",
        found_t == listed_t,
        "extra: " + ", ".join(f"({_q(t)}, {_q(s)})" for t, s in extra) if extra else "",
    )

    classified = []
    for d, pts in found.items():
        for t, s in pts:
            sieve = irreducibility_sieve(underlying_poly(3, d, t))
            classified.append(
                {"delta": d, "t": _q(t), "s": _q(s), "sieve": str(sieve),
                 "irreducible": sieve.verdict is Verdict.IRREDUCIBLE}
            )
    rep.data["points"] = classified
    rep.data["irreducible_square_disc"] = [c for c in classified if c["irreducible"]]
    rep.data["listed_point_curves"] = [
        {"listed_delta": d, "t": _q(t), "on_curves": on} for (d, t), on in listed_on.items()
    ]
    return rep


def n3_example(samples: int = 10, height: int = 20, seed: int = 0) -> Report:
    """Depressed cubics, the square-ratio cross-check and the point search together."""
    rep = Report("degree-3 underlying polynomials")
    parts = [
        repro_depressed_cubics(samples, seed),
        crosscheck_sextic_vs_disc(0, 20, seed),
        crosscheck_sextic_vs_disc(1, 20, seed),
        repro_hyperelliptic(height),
    ]
    for part in parts:
        for c in part.checks:
            rep.checks.append(Check(f"{part.title} / {c.name}", c.ok, c.detail))
    rep.data = {part.title: part.data for part in parts}
    return rep


__all__ = [
    "Check",
    "Report",
    "SexticCurve",
    "NP_EXAMPLE_TABLE",
    "NP_EXAMPLE_BREAKS",
    "K20_COFACTOR",
    "LISTED_POINTS",
    "repro_example_np",
    "theorem_window",
    "verify_theorem",
    "verify_distinguished",
    "verify_corollary",
    "verify_prop_minus1",
    "repro_k20",
    "repro_depressed_cubics",
    "listed_cubic",
    "hyperelliptic_search",
    "sextic_disc_ratio",
    "crosscheck_sextic_vs_disc",
    "repro_hyperelliptic",
    "n3_example",
]
