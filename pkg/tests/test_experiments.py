from fractions import Fraction as F

import pytest

from krawtchouk_np.experiments import (
    K20_COFACTOR,
    LISTED_POINTS,
    NP_EXAMPLE_BREAKS,
    NP_EXAMPLE_TABLE,
    SexticCurve,
    crosscheck_sextic_vs_disc,
    hyperelliptic_search,
    listed_cubic,
    n3_example,
    repro_depressed_cubics,
    repro_example_np,
    repro_hyperelliptic,
    repro_k20,
    sextic_disc_ratio,
    theorem_window,
    verify_corollary,
    verify_distinguished,
    verify_prop_minus1,
    verify_theorem,
)
from krawtchouk_np.render import polygon_svg, polygon_text
from krawtchouk_np.newton import coefficient_valuations, newton_polygon
from krawtchouk_np.krawtchouk import krawtchouk_poly

from oracles import binom, lower_hull_brute, vp_brute


def test_np_example_table_against_oracle():
    # coefficient of x^i of K_19^(19), expanded from the binomial definition by brute force
    n = 19
    coeffs = [F(0)] * (n + 1)
    for j in range(n + 1):
        # binom(x, j) = x(x-1)...(x-j+1)/j!, expanded in monomials
        falling = [F(1)]
        for i in range(j):
            falling = [F(0)] + falling
            for k in range(len(falling) - 1):
                falling[k] -= i * falling[k + 1]
        w = (-2) ** j * binom(F(n - j), n - j) / binom(F(j), j) / _fact(j)
        for k, c in enumerate(falling):
            coeffs[k] += w * c
    table = tuple((j, vp_brute(coeffs[n - j], 2)) for j in range(n + 1))
    assert table == NP_EXAMPLE_TABLE
    assert tuple(lower_hull_brute(list(table))) == NP_EXAMPLE_BREAKS


def _fact(j):
    out = 1
    for i in range(2, j + 1):
        out *= i
    return out


def test_repro_example_np():
    rep = repro_example_np()
    assert rep.ok and len(rep.checks) == 3
    assert rep.data["polygon"]["vertices"] == [list(v) for v in NP_EXAMPLE_BREAKS]
    other = repro_example_np(12)
    assert other.ok and len(other.checks) == 1
    with pytest.raises(ValueError):
        repro_example_np(0)


def test_theorem_window():
    assert list(theorem_window(12)) == [12, 13, 14, 15]
    assert list(theorem_window(7)) == [7]


def test_small_verifications():
    assert verify_theorem(20).ok
    assert verify_distinguished(20).ok
    assert verify_corollary(4).data["cases"] == 31
    rep = verify_prop_minus1(4)
    assert rep.ok and [r["descartes_positive"] for r in rep.data["rows"]] == [0, 0, 0]
    assert [r["root_product"] for r in rep.data["rows"]] == ["3/2", "315/2", "638512875/2"]


def test_k20():
    rep = repro_k20()
    assert rep.ok, rep.lines()
    assert rep.data["cofactor"] == str(K20_COFACTOR)
    assert len(rep.data["order7_primes"]) == 65


def test_listed_cubics():
    # t = 0 by hand from the listed coefficient polynomials
    assert listed_cubic(0, 0).coeffs == (F(965, 27), F(-131, 6), 0, 1)
    assert repro_depressed_cubics(10, seed=5).ok


def test_sextic_curves():
    c0, c1 = SexticCurve.for_delta(0), SexticCurve.for_delta(1)
    # t = 3 gives 21/2 on the delta = 0 curve and 117/2 on the delta = 1 curve
    assert c0(3) == F(21, 2) ** 2 and c1(3) == F(117, 2) ** 2
    with pytest.raises(ValueError):
        SexticCurve(0, (F(1),) * 3)


@pytest.mark.parametrize("delta", [0, 1])
def test_sextic_over_disc_is_one(delta):
    for t in (F(1, 3), F(-7, 2), F(11)):
        assert sextic_disc_ratio(delta, t) == 1
    assert crosscheck_sextic_vs_disc(delta, 20, seed=1).ok


def test_hyperelliptic_search_points_lie_on_curve():
    for delta in (0, 1):
        curve = SexticCurve.for_delta(delta)
        for t, s in hyperelliptic_search(delta, 12):
            assert s >= 0 and s * s == curve(t)


def test_listed_points_sit_on_the_other_curve():
    for delta, pts in LISTED_POINTS.items():
        other = SexticCurve.for_delta(1 - delta)
        for t, s in pts:
            assert other(t) == F(s) ** 2


def test_repro_hyperelliptic_reports_extra_points():
    rep = repro_hyperelliptic(20)
    by_name = {c.name: c for c in rep.checks}
    assert by_name["each listed (t, s) lies on one of the curves"].ok
    assert by_name["listed points found"].ok
    assert rep.data["labels_swapped"] is True
    extra = {(p["t"], p["s"]) for p in rep.data["irreducible_square_disc"]}
    assert extra == {("4/3", "56/3"), ("10/7", "6852/49")}
    # the union equality fails because of these two non-integral t
    assert not by_name["found t-values equal the listed ones"].ok


def test_n3_example_collects_parts():
    rep = n3_example()
    assert len(rep.checks) == 8 and sum(not c.ok for c in rep.checks) == 1


def test_report_json():
    out = verify_theorem(4).to_json()
    assert out["ok"] is True and out["checks"][0]["ok"] is True


def test_polygon_drawings():
    f = krawtchouk_poly(6, 6)
    points = coefficient_valuations(f, 2)
    poly = newton_polygon(f, 2)
    text = polygon_text(points, poly)
    assert text.count("O") == len(poly.vertices)
    svg = polygon_svg(points, poly)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
