from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptchrom import graphs
from ptchrom.analysis import (
    BoundViolated,
    OutsideDomain,
    RegionTag,
    a_constant,
    classify_region,
    dominant_gap,
    locus_boundary_sample,
    q_w,
    q_w_interval,
    ratio_d_closed,
    ratio_l_closed,
    ratio_limit,
    ratio_s_closed,
    render_svg,
    second_zero_predictor,
    tutte_bound,
    tutte_ratio,
    w_function,
    zero_report,
)
from ptchrom.chromatic import chromatic_poly
from ptchrom.exactmath import Polynomial, QuadNum, TAU_MINUS_1, TAU_PLUS_1
from ptchrom.families import (
    F_GF,
    LAMBDA_I,
    LAMBDA_TC,
    evaluate_form,
    f_polynomials,
    family_form,
    kappas,
)

q = Polynomial.q()
TAU1 = float(TAU_PLUS_1)
SQRT5 = QuadNum(0, 1)


def _member(name, m, k=None):
    f = family_form(name, k)
    return evaluate_form(f, m), f.n_vertices(m)


# ratios ----------------------------------------------------------------------------


def test_tutte_ratio_examples():
    assert tutte_ratio(q * (q - 1) * (q - 2), 3).r_exact == 1
    r = tutte_ratio(*_member("D", [0, 0]))
    assert round(r.r_float, 4) == 0.5836
    r = tutte_ratio(*_member("D", [1, 2]))
    assert round(r.r_float, 4) == 0.3769
    assert r.r_exact == QuadNum(101, -45)
    assert r.r_exact == abs(r.P_at_tau1) / r.U


def test_tutte_bound_values():
    assert tutte_bound(5) == 1
    assert tutte_bound(6) == TAU_MINUS_1
    assert float(tutte_bound(3)) == pytest.approx(1 / 0.618033988749895**2)


def test_tutte_ratio_rejects_bad_input():
    with pytest.raises(BoundViolated):
        tutte_ratio(q * (q - 1) * (q - 2) * (q**2 - 3 * q + 1), 5)
    with pytest.raises(BoundViolated):
        tutte_ratio(Polynomial([0, 0, 0, 0, 0, 10]), 5)


def test_tutte_bound_holds_across_families():
    samples = [_member("B", [m]) for m in range(3, 10)]
    samples += [_member("H", [m]) for m in range(3, 10)] + [_member("L", [m]) for m in range(3, 10)]
    samples += [_member("D", list(m)) for m in product(range(4), repeat=2)]
    samples += [_member("S", list(m)) for m in product(range(4), repeat=2)]
    samples += [_member("R", [m]) for m in range(1, 8)] + [_member("TC", [m]) for m in range(1, 6)]
    samples += [_member("I", [m]) for m in range(1, 3)]
    samples += [(p, m + 4) for m, p in enumerate(f_polynomials(8), start=1)]
    for g in (graphs.make_icosahedron(), graphs.make_bipyramid(7)):
        samples.append((chromatic_poly(g), g.n))
    for p, n in samples:
        r = tutte_ratio(p, n)
        assert 0 < r.r_float <= 1 + 1e-12


def test_l_closed_form():
    xi = (1 - SQRT5) / 2
    tau = (1 + SQRT5) / 2
    for m in range(3, 11):
        r = tutte_ratio(*_member("L", [m])).r_exact
        assert r == (SQRT5 - 2) * (1 + 2 * tau * xi**m) == ratio_l_closed(m)
        # the printed closed form drops the factor tau (see the decisions ledger)
        assert r != (SQRT5 - 2) * (1 + 2 * xi**m)
    assert ratio_limit(family_form("L")).r_inf == SQRT5 - 2


def test_d_closed_form():
    for m1, m2 in product(range(5), repeat=2):
        assert tutte_ratio(*_member("D", [m1, m2])).r_exact == ratio_d_closed(m1, m2)


def test_s_closed_form_and_decay():
    c = 0.0
    for m in range(0, 12):
        r = tutte_ratio(*_member("S", [m, m])).r_exact
        assert r == ratio_s_closed(m, m)
        c = max(c, float(r) / ((math.sqrt(5) - 1) / 2) ** m)
    # fitted constant, then the bound must hold further out
    for m in range(12, 30):
        assert float(ratio_s_closed(m, m)) < c * ((math.sqrt(5) - 1) / 2) ** m
    assert ratio_limit(family_form("S_diag")).r_inf == 0


def test_ratio_limit_examples():
    assert ratio_limit(family_form("B")).r_inf == (SQRT5 - 1) / 2
    assert float(ratio_limit(family_form("B")).r_inf) == pytest.approx(0.6180, abs=5e-5)
    both = ratio_limit(family_form("D"), "both").r_inf
    assert both == (3 - SQRT5) / 2
    assert ratio_limit(family_form("D"), "m2", 0).r_inf == QuadNum(-13, 6)
    assert ratio_limit(family_form("D"), "m1", 1).r_inf == QuadNum(Fraction(-15, 2), Fraction(7, 2))


def test_rdrel_identity():
    d = family_form("D")
    for k in range(0, 9):
        assert ratio_limit(d, "m1", k + 2).r_inf == ratio_limit(d, "m2", k).r_inf


def test_ratio_limit_matches_members():
    f = family_form("L")
    lim = float(ratio_limit(f).r_inf)
    assert abs(tutte_ratio(*_member("L", [60])).r_float - lim) < 1e-10


def test_single_power_limits():
    for name, a in (("R", 0.618), ("TC", 0.914152), ("I", 0.805524)):
        lim = ratio_limit(family_form(name))
        assert lim.r_inf == 0
        assert lim.a_const == pytest.approx(a, abs=5e-4 if name == "R" else 5e-7)
        assert lim.a_const < 1
    assert a_constant(family_form("TC")) == pytest.approx((3 - math.sqrt(5)) ** (1 / 3), rel=1e-12)


def test_a_constant_examples():
    for name in ("B", "H", "L", "D", "D_diag"):
        assert a_constant(family_form(name)) == pytest.approx(1.0, abs=1e-12)
    assert a_constant(F_GF) == pytest.approx(0.786151, abs=1e-6)


# zeros --------------------------------------------------------------------------------


def test_q_w():
    assert q_w() == pytest.approx(2.546602, abs=1e-6)
    iv = q_w_interval()
    assert LAMBDA_TC(iv.lo) < 0 < LAMBDA_TC(iv.hi)


def test_zero_report_examples():
    rep = zero_report(*_member("L", [4]))
    assert rep.n == 9
    assert rep.q_z == pytest.approx(2.630048, abs=5e-7)
    assert rep.q_z_offset == pytest.approx(0.01201, abs=5e-6)
    rep = zero_report(*_member("D_fixed_m2", [5], 0))
    assert rep.n == 10 and rep.q_z == pytest.approx(2.677815, abs=5e-7)
    rep = zero_report(*_member("D_fixed_m2", [5], 2))
    assert rep.n == 12
    assert rep.q_z == pytest.approx(2.614614, abs=5e-7)
    assert rep.q_z_prime == pytest.approx(2.818897, abs=5e-7)


def test_zero_report_conjugate_pair():
    rep = zero_report(*_member("D_fixed_m2", [4], 2))
    assert rep.n == 11 and rep.conjugate_pair and rep.q_z is None
    assert rep.complex_pair.re == pytest.approx(2.641998, abs=5e-7)
    assert abs(rep.complex_pair.im) == pytest.approx(0.014795, abs=5e-7)


def test_zero_report_real_zeros_verified():
    p, n = _member("H", [9])
    rep = zero_report(p, n)
    sq = p.square_free()
    for z in rep.all_real_zeros:
        lo, hi = Fraction(z) - Fraction(1, 10**8), Fraction(z) + Fraction(1, 10**8)
        assert sq(lo) * sq(hi) <= 0


def test_d0_contains_lambda_tc():
    f = family_form("D_fixed_m2", 0)
    for m in range(4, 14):
        p = evaluate_form(f, [m])
        assert LAMBDA_TC.divides(p)
        assert zero_report(p, f.n_vertices([m]), with_complex=False).lambda_tc_multiplicity >= 1


def test_l_table_parity_and_decay():
    offsets = []
    for m in range(4, 16):
        rep = zero_report(*_member("L", [m]), with_complex=False)
        offsets.append((m + 5, rep.q_z_offset))
    for (n1, o1), (n2, o2) in zip(offsets, offsets[1:]):
        assert math.copysign(1, o1) != math.copysign(1, o2)
    for (n1, o1), (n2, o2) in zip(offsets, offsets[2:]):
        assert abs(o2) < abs(o1)


def test_second_zero_predictor():
    assert second_zero_predictor(kappas(family_form("D_fixed_m2", 2))[2]) == pytest.approx(
        2.7227000945, abs=1e-9)
    assert second_zero_predictor(kappas(family_form("D_fixed_m2", 1))[2]) is None
    k3 = kappas(family_form("D_fixed_m2", 3))[2]
    assert second_zero_predictor(k3) is None
    assert k3.multiplicity(q - 3) == 2


# locus ---------------------------------------------------------------------------------


def test_classify_examples():
    assert classify_region(4) is RegionTag.R1
    assert classify_region(2.5) is RegionTag.R3
    assert classify_region(complex(2.5, math.sqrt(3) / 2)) is RegionTag.TRIPLE
    assert classify_region((Fraction(3), Fraction(0))) is RegionTag.ARC_13
    assert classify_region((Fraction(2), Fraction(0))) is RegionTag.ARC_23
    assert classify_region((Fraction(5, 2), Fraction(1))) is RegionTag.LINE_12
    assert classify_region((Fraction(1), Fraction(0))) is RegionTag.R2


coords = st.fractions(min_value=-2, max_value=7, max_denominator=12)


@given(coords, coords)
@settings(max_examples=300)
def test_classify_partition_and_conjugation(x, y):
    tag = classify_region((x, y))
    assert isinstance(tag, RegionTag)
    assert classify_region((x, -y)) is tag
    d2 = (x - 2) ** 2 + y**2
    d3 = (x - 3) ** 2 + y**2
    if tag is RegionTag.R3:
        assert d2 < 1 and d3 < 1
    elif tag is RegionTag.R1:
        assert d2 > 1 and d2 > d3
    elif tag is RegionTag.R2:
        assert d3 > 1 and d3 > d2


def test_locus_sample():
    pts = locus_boundary_sample(100)
    assert len(pts) == 100
    tags = [p.tag for p in pts]
    assert tags.count(RegionTag.TRIPLE) == 4
    for p in pts:
        assert dominant_gap(p) < 1e-12
        assert classify_region(p.q) is p.tag
    ends = {(round(p.q.real, 12), round(p.q.imag, 12)) for p in pts if p.tag is RegionTag.TRIPLE}
    assert ends == {(2.5, round(math.sqrt(3) / 2, 12)), (2.5, -round(math.sqrt(3) / 2, 12))}
    with pytest.raises(ValueError):
        locus_boundary_sample(2)


def test_locus_arc_midpoint_and_line():
    pts = locus_boundary_sample(12)
    arc13 = [p for p in pts if p.tag is RegionTag.ARC_13]
    assert any(abs(p.q - 3) < 1e-12 for p in arc13)
    assert abs(abs(complex(2.5, 1) - 2) - abs(complex(2.5, 1) - 3)) == 0


def test_render_svg():
    svg = render_svg(locus_boundary_sample(20))
    assert svg.startswith("<?xml") and svg.count("<path") == 2 and svg.count("<circle") == 20


# W functions --------------------------------------------------------------------------


def test_w_examples():
    assert w_function("TC", 3).W == pytest.approx(1.0, abs=1e-12)
    assert w_function("B", 5).W == 3
    rep = w_function("S", 6)
    assert rep.W == pytest.approx(math.sqrt(12)) and rep.S0_positive
    assert w_function("R", 4).W == 1 and not w_function("R", 4).S0_positive
    assert w_function("I", 4).W == pytest.approx(float(LAMBDA_I(4)) ** (1 / 9))


def test_w_lambda_i_crossing():
    shifted = LAMBDA_I - 1
    from ptchrom.exactmath import real_roots

    roots = real_roots(shifted, 3, 4, tol=1e-12)
    assert len(roots) == 1 and roots[0] == pytest.approx(3.5133658, abs=1e-6)
    assert w_function("I", 3.6, "qn").S0_positive
    assert not w_function("I", 3.4, "qn").S0_positive


def test_w_conventions():
    with pytest.raises(OutsideDomain):
        w_function("B", 3.5)
    rep = w_function("B", 3.5, "qn")
    assert rep.convention == "W_qn" and rep.W == 1.5
    with pytest.raises(OutsideDomain):
        w_function("F", 3.6, "qn")
    assert w_function("F", 3.7, "qn").q_c == pytest.approx(TAU1 + 1)
    assert w_function("F", 5).W == pytest.approx(w_function("F", 5).W)
    with pytest.raises(KeyError):
        w_function("nope", 5)
    with pytest.raises(ValueError):
        w_function("B", 5, "other")


def test_w_s_against_growth_rate():
    f = family_form("S_diag")
    for x in (5, 6):
        a, b = evaluate_form(f, [29])(x), evaluate_form(f, [30])(x)
        # one step in m adds two vertices
        growth = math.exp((math.log(b) - math.log(a)) / 2)
        want = w_function("S", x).W
        assert abs(growth - want) / want < 1e-3
