import random
from fractions import Fraction as F

import pytest

from krawtchouk_np.algebra import int_discriminant, primitive_integer_form
from krawtchouk_np.batch import batch_cycle_types, batch_galois_scan, family_member, underlying_family
from krawtchouk_np.galois import galois_scan
from krawtchouk_np.krawtchouk import underlying_poly


def sample_ts(seed, count=25):
    rng = random.Random(seed)
    ts = {F(rng.randint(-50, 50), rng.randint(1, 50)) for _ in range(count)}
    return sorted(ts | {F(0), F(1), F(-1)})


@pytest.mark.parametrize("m", range(1, 9))
@pytest.mark.parametrize("delta", [0, 1])
def test_family_member_matches_direct_construction(m, delta):
    for t in sample_ts(10 * m + delta):
        G = family_member(m, delta, t)
        assert G == primitive_integer_form(underlying_poly(m, delta, t))
        # the scale recovers the rational polynomial itself
        assert G.to_ratpoly() == underlying_poly(m, delta, t)


def test_family_table_is_integral():
    table, den = underlying_family(3, 1)
    assert den > 0 and len(table) == 4 and all(len(row) == 8 for row in table)


@pytest.mark.parametrize("m", [1, 2, 3, 5, 8, 12])
def test_batch_scan_equals_scalar_scan(m):
    ts = sample_ts(m, 40)
    for delta in (0, 1):
        polys = [family_member(m, delta, t) for t in ts]
        assert batch_galois_scan(polys, 200) == [galois_scan(G, 200) for G in polys]


def test_batch_cycle_types_small_primes():
    # primes p <= m use the scalar factorisation, the rest the trace engine
    polys = [family_member(6, 0, t) for t in sample_ts(5, 10)]
    discs = [int_discriminant(G) for G in polys]
    primes = [3, 5, 7, 101, 499]
    for G, cts in zip(polys, batch_cycle_types(polys, discs, primes)):
        assert cts == [(p, ct) for p, ct in galois_scan(G, 499).witnesses if p in primes]


def test_batch_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        batch_cycle_types([family_member(2, 0, F(1)), family_member(3, 0, F(1))], [1, 1], [101])
