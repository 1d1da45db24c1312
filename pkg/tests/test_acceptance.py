"""Acceptance criteria, one test each.

Every test prints a single ``CRITERION <k> PASS|FAIL <detail>`` line (shown
with ``-s`` and repeated in the terminal summary) and then asserts the
criterion.  Tolerances are exact throughout; wall-clock budgets are checked
where a budget is stated.
"""
import itertools
import random
import time
from fractions import Fraction as F

import pytest

from krawtchouk_np.algebra import RatPoly, poly_mul, resultant, vp, vp_factorial
from krawtchouk_np.experiments import (
    NP_EXAMPLE_BREAKS,
    NP_EXAMPLE_TABLE,
    repro_example_np,
    repro_hyperelliptic,
    repro_k20,
    n3_example,
    verify_corollary,
    verify_distinguished,
    verify_prop_minus1,
    verify_theorem,
)
from krawtchouk_np.galois import SieveBudget, Verdict, irreducibility_sieve
from krawtchouk_np.krawtchouk import KrawtchoukSpec, check_jacobi_identity, shifted_poly, underlying_poly
from krawtchouk_np.modp import PrimePoly, factor_degrees_mod_p, is_squarefree_mod_p
from krawtchouk_np.newton import newton_polygon
from krawtchouk_np.sweep import SweepConfig, conjecture_sweep, summary_path

from conftest import ACCEPTANCE_LINES
from oracles import factor_degrees_brute, lower_hull_brute, sylvester_resultant, vp_factorial_brute


def report(k: int, ok: bool, detail: str, seconds: float | None = None) -> None:
    timing = f" [{seconds:.1f}s]" if seconds is not None else ""
    line = f"CRITERION {k} {'PASS' if ok else 'FAIL'} {detail}{timing}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def random_rationals(rng, count, bound=30):
    return [F(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(count)]


def test_criterion_01_np_example():
    rep, secs = timed(repro_example_np)
    table = [tuple((j, int(v))) for j, v in rep.data["table"]]
    breaks = tuple(tuple(v) for v in rep.data["polygon"]["vertices"])
    ok = rep.ok and tuple(table) == NP_EXAMPLE_TABLE and breaks == NP_EXAMPLE_BREAKS and secs < 1
    report(1, ok, f"K_19^(19): {len(table)} valuation pairs, breaks {list(breaks)}", secs)
    assert ok


def test_criterion_02_degree_based_windows():
    rep, secs = timed(lambda: verify_theorem(64))
    ok = rep.ok and secs < 60
    report(2, ok, f"n <= 64: {rep.data['cases']} cases, {len(rep.data['failures'])} failures", secs)
    assert ok


def test_criterion_03_eisenstein_powers_of_two():
    rep, secs = timed(lambda: verify_corollary(6))
    ok = rep.ok and secs < 30
    report(3, ok, f"k <= 6: {rep.data['cases']} cases, {len(rep.data['failures'])} failures", secs)
    assert ok


def test_criterion_04_distinguished_points():
    rep, secs = timed(lambda: verify_distinguished(64))
    report(4, rep.ok, f"n <= 64 at t = n: {len(rep.data['failures'])} failures", secs)
    assert rep.ok


def test_criterion_05_degree_twenty():
    rep, secs = timed(repro_k20)
    ok = rep.ok and secs < 120
    failed = [c.name for c in rep.checks if not c.ok]
    detail = (
        f"valuations, cofactor, {rep.data['interval_good_primes']} good primes, "
        f"{len(rep.data['order7_primes'])} with a degree-7 factor, {rep.data['report']['status']}"
    )
    report(5, ok, detail + (f"; failed: {failed}" if failed else ""), secs)
    assert ok


def test_criterion_06_minus_one():
    rep, secs = timed(lambda: verify_prop_minus1(6))
    report(6, rep.ok, f"2 <= k <= 6: {sum(not c.ok for c in rep.checks)} failed checks", secs)
    assert rep.ok


def test_criterion_07_parity_and_reconstruction():
    rng = random.Random(7)
    failures = 0
    cases = 0
    for n in range(41):
        m, delta = divmod(n, 2)
        for t in random_rationals(rng, 20):
            cases += 1
            g = shifted_poly(n, t)
            if any(c != 0 for j, c in enumerate(g.coeffs) if (j - n) % 2):
                failures += 1
                continue
            if n == 0:
                continue
            u = underlying_poly(m, delta, t)
            rebuilt = [F(0)] * (n + 1)
            for i, c in enumerate(u.coeffs):
                rebuilt[2 * i + delta] = c
            if RatPoly(rebuilt) != g:
                failures += 1
    report(7, failures == 0, f"n <= 40 x 20 t: {cases} cases, {failures} failures")
    assert failures == 0


def test_criterion_08_jacobi_identity():
    rng = random.Random(8)
    failures = 0
    for n in range(13):
        for t in random_rationals(rng, 50):
            x0 = F(rng.randint(-30, 30), rng.randint(1, 12))
            if not check_jacobi_identity(KrawtchoukSpec(n, t), x0):
                failures += 1
    report(8, failures == 0, f"n <= 12 x 50 (t, x0): {failures} failures")
    assert failures == 0


def _oracle_vp_factorial():
    bad = 0
    for p in (2, 3, 5, 7, 11):
        running = 0
        for n in range(2001):
            if n >= 2:
                running += vp_factorial_brute(n, p) - vp_factorial_brute(n - 1, p)
            bad += vp_factorial(n, p) != running
    return bad


def _oracle_hull(rng):
    bad = 0
    for _ in range(200):
        p = rng.choice([2, 3, 5])
        size = rng.randint(2, 16)
        coeffs = []
        for _ in range(size):
            if rng.random() < 0.1:
                coeffs.append(F(0))
            else:
                unit = rng.choice([u for u in range(1, 4 * p) if u % p])
                coeffs.append(F(unit) * F(p) ** rng.randint(-3, 9))
        coeffs[-1] = coeffs[-1] or F(1)
        if all(c == 0 for c in coeffs[:-1]):
            coeffs[0] = F(1)
        f = RatPoly(coeffs)
        points = [(f.degree - j, vp(c, p)) for j, c in enumerate(f.coeffs) if c != 0]
        bad += list(newton_polygon(f, p).vertices) != lower_hull_brute(points)
    return bad


def _oracle_resultant(rng):
    bad = 0
    for _ in range(200):
        f = [rng.randint(-20, 20) for _ in range(rng.randint(1, 6))] + [rng.choice([-1, 1]) * rng.randint(1, 20)]
        g = [rng.randint(-20, 20) for _ in range(rng.randint(1, 6))] + [rng.choice([-1, 1]) * rng.randint(1, 20)]
        bad += resultant(f, g) != sylvester_resultant(f, g)
    return bad


def _oracle_ddf(rng):
    bad = cases = 0
    # exhaustive where the space is small, sampled at p = 5, 7 for the top degrees
    for p, dmax in ((2, 6), (3, 4), (5, 3), (7, 2)):
        for d in range(1, dmax + 1):
            for tail in itertools.product(range(p), repeat=d):
                g = PrimePoly(p, tail + (1,))
                if is_squarefree_mod_p(g):
                    cases += 1
                    bad += list(factor_degrees_mod_p(g).degrees) != factor_degrees_brute(list(g.coefficients), p)
    for p in (3, 5, 7):
        done = 0
        while done < 100:
            d = rng.randint(3, 6)
            coeffs = [rng.randrange(p) for _ in range(d)] + [rng.randrange(1, p)]
            g = PrimePoly(p, tuple(coeffs))
            if not is_squarefree_mod_p(g):
                continue
            done += 1
            cases += 1
            bad += list(factor_degrees_mod_p(g).degrees) != factor_degrees_brute(coeffs, p)
    return bad, cases


def _oracle_sieve(rng):
    bad = 0
    budget = SieveBudget(prime_bound=100, local_bound=30)
    for _ in range(500):
        dg = rng.randint(1, 5)
        dh = rng.randint(1, 10 - dg)
        g = RatPoly([rng.randint(-20, 20) for _ in range(dg)] + [rng.randint(1, 20)])
        h = RatPoly([rng.randint(-20, 20) for _ in range(dh)] + [rng.randint(1, 20)])
        bad += irreducibility_sieve(poly_mul(g, h), budget).verdict is Verdict.IRREDUCIBLE
    return bad


def test_criterion_09_oracle_equivalences():
    rng = random.Random(9)
    counts = {
        "vp_factorial": _oracle_vp_factorial(),
        "hull": _oracle_hull(rng),
        "resultant": _oracle_resultant(rng),
    }
    counts["ddf"], ddf_cases = _oracle_ddf(rng)
    counts["sieve"] = _oracle_sieve(rng)
    ok = not any(counts.values())
    detail = ", ".join(f"{k} {v} mismatches" for k, v in counts.items())
    report(9, ok, f"{detail} ({ddf_cases} DDF cases)")
    assert ok


def test_criterion_10_cubic_example():
    rep, secs = timed(n3_example)
    hyper = repro_hyperelliptic(20)
    failed = [c for c in rep.checks if not c.ok]
    detail = "; ".join(f"{c.name}: {c.detail}" for c in failed) or "all checks pass"
    detail += f"; label swap flagged: {hyper.data['labels_swapped']}"
    ok = rep.ok and hyper.data["labels_swapped"] and secs < 30
    report(10, ok, detail, secs)
    assert ok


@pytest.mark.slow
def test_criterion_11_sweep(tmp_path):
    start = time.perf_counter()
    a, b = tmp_path / "a" / "sweep.csv", tmp_path / "b" / "sweep.csv"
    summary = conjecture_sweep(SweepConfig(workers=1), a)
    conjecture_sweep(SweepConfig(workers=2), b)
    secs = time.perf_counter() - start
    identical = a.read_bytes() == b.read_bytes() and summary_path(a).read_bytes() == summary_path(b).read_bytes()
    witnesses = summary.contradiction_witnesses
    counts = ", ".join(f"{k} {v}" for k, v in sorted(summary.status_counts.items()))
    listed = "; ".join(f"n={w['n']} delta={w['delta']} t={w['t']} {w['sieve']}" for w in witnesses)
    ok = identical and not witnesses and summary.rows == summary.distinct_points
    report(
        11,
        ok,
        f"{summary.rows} rows ({counts}); byte-identical reruns: {identical}; "
        f"{len(witnesses)} contradiction witnesses" + (f" ({listed})" if listed else ""),
        secs,
    )
    assert ok
