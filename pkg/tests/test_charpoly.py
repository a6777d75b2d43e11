import math
import time
from decimal import Decimal
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from addseq import charpoly, seqcore
from addseq.charpoly import IntPolynomial, RecurrenceSpec

X = sympy.Symbol("x")


def sympy_positive_root(coeffs, digits=40):
    poly = sympy.Poly(list(reversed(coeffs)), X)
    real = [r for r in poly.nroots(n=digits) if r.is_real and r > 0]
    return max(real)


def same_multiset(a, b, tol):
    b = list(b)
    for z in a:
        j = min(range(len(b)), key=lambda i: abs(b[i] - z))
        if abs(b[j] - z) > tol:
            return False
        b.pop(j)
    return not b


# -- construction ------------------------------------------------------------------

def test_golden_polynomial():
    assert str(charpoly.golden_polynomial(2)) == "x^2 - x - 1"
    assert charpoly.golden_polynomial(1).coeffs == (-1, 1)
    for p in range(1, 30):
        assert charpoly.golden_polynomial(p)(1) == -(p - 1)
    with pytest.raises(ValueError):
        charpoly.golden_polynomial(0)


def test_char_poly():
    meru4 = charpoly.char_poly(RecurrenceSpec([(1, 1), (1, 4)]))
    assert meru4.coeffs == (-1, 0, 0, -1, 1)
    for p in range(1, 10):
        rec = RecurrenceSpec([(1, k) for k in range(1, p + 1)])
        assert charpoly.char_poly(rec) == charpoly.golden_polynomial(p)
    assert charpoly.char_poly(RecurrenceSpec([(3, 1), (5, 2)])).coeffs == (-5, -3, 1)
    with pytest.raises(ValueError):
        RecurrenceSpec([(1, 1), (1, 1)])
    with pytest.raises(ValueError):
        RecurrenceSpec([(1, 0)])


def test_polynomial_evaluation_matches_sympy():
    poly = IntPolynomial([3, -4, 0, 7, 1])
    sp = sympy.Poly([1, 7, 0, -4, 3], X)
    for x in (Fraction(1, 3), Fraction(-5, 2), 2):
        assert poly(x) == sp.eval(sympy.Rational(x))


# -- roots -------------------------------------------------------------------------

def test_golden_roots_match_numpy():
    for p in range(2, 25):
        poly = charpoly.golden_polynomial(p)
        rs = charpoly.all_roots(poly)
        assert len(rs.roots) == p
        assert rs.converged and rs.residual_bound < 1e-10
        oracle = np.roots(list(reversed(poly.coeffs)))
        assert same_multiset(rs.roots, oracle, 1e-7)


def test_known_roots():
    rs = charpoly.all_roots(charpoly.golden_polynomial(2))
    assert rs.roots[0] == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-12)
    assert rs.roots[1] == pytest.approx((1 - math.sqrt(5)) / 2, abs=1e-12)
    assert charpoly.all_roots(IntPolynomial([-1, 1])).roots == [1.0]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=9).filter(lambda c: c[-1] != 0 and c[0] != 0))
def test_random_roots_match_numpy(coeffs):
    poly = IntPolynomial(coeffs)
    try:
        rs = charpoly.all_roots(poly)
    except charpoly.RootError:
        return  # repeated roots can stall; the error path is covered below
    oracle = np.roots(list(reversed(coeffs)))
    assert same_multiset(rs.roots, oracle, 1e-5)


def test_root_error_carries_estimate():
    # (x - 1)^8 stalls Durand-Kerner well short of a 1e-300 tolerance
    poly = IntPolynomial([math.comb(8, k) * (-1) ** (8 - k) for k in range(9)])
    with pytest.raises(charpoly.RootError) as exc:
        charpoly.all_roots(poly, tol=1e-300)
    assert len(exc.value.best.roots) == 8


def test_root_geometry():
    # Phi_p is the only root outside the unit circle, for every p <= 24
    for p in range(2, 25):
        rs = charpoly.all_roots(charpoly.golden_polynomial(p))
        top, rest = rs.roots[0], rs.roots[1:]
        assert top.imag == 0 and 1 < top.real < 2
        assert all(abs(z) < 1 for z in rest)


def test_dominant_root_vs_sympy():
    for p in (2, 3, 5, 8, 13, 21):
        phi = charpoly.golden_ratio(p)
        oracle = sympy_positive_root(charpoly.golden_polynomial(p).coeffs)
        # every one of the 30 returned digits is correct
        assert abs(Decimal(str(oracle)) - phi) < Decimal("1e-28")


def test_dominant_root_examples():
    assert charpoly.round5(charpoly.golden_ratio(3)) == Decimal("1.83929")
    phi17 = charpoly.golden_ratio(17)
    assert charpoly.round5(phi17) == Decimal("1.99999") and phi17 < 2
    assert charpoly.round5(charpoly.dominant_root(charpoly.stakhov_polynomial(1))) == Decimal("1.61803")
    assert charpoly.golden_ratio(1) == 1
    with pytest.raises(charpoly.RootError):
        charpoly.dominant_root(charpoly.golden_polynomial(2), (2, 3))


def test_golden_ratio_monotone_below_two():
    phis = [charpoly.golden_ratio(p) for p in range(2, 40)]
    assert all(a < b for a, b in zip(phis, phis[1:]))
    assert all(1 < x < 2 for x in phis)
    # Phi_p -> 2 with 2 - Phi_p roughly 2^-p
    for p, x in zip(range(2, 40), phis):
        assert 2 - x < Decimal(2) ** (1 - p)


def test_table_runtime():
    start = time.perf_counter()
    for p in range(2, 22):
        charpoly.golden_ratio(p)
    assert time.perf_counter() - start < 1.0


# -- ratios ------------------------------------------------------------------------

def test_limiting_ratio_transients():
    # start-up stretches where the ratio is exactly 2 must not end the search
    for seeds in [(0, 1, 2, 3), (0, 0, 1), (1, 2, 4, 8, 16), (0, 0, 0, 0, 1)]:
        p = len(seeds)
        assert abs(charpoly.limiting_ratio(seqcore.general(seeds)) - float(charpoly.golden_ratio(p))) < 1e-9


def test_limiting_ratio_examples():
    assert charpoly.limiting_ratio(seqcore.general((2, 21))) == pytest.approx(1.61803, abs=1e-5)
    assert charpoly.limiting_ratio(seqcore.one_sequence(3, 2)) == 1.0
    assert charpoly.limiting_ratio(seqcore.make_family("exponent", 4)) == pytest.approx(1.92756, abs=1e-5)
    with pytest.raises(ValueError):
        charpoly.limiting_ratio(seqcore.general((0, 0)))


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_seed_independence(data):
    for p in range(2, 6):
        seeds = data.draw(st.lists(st.integers(0, 10**6), min_size=p, max_size=p).filter(any))
        got = charpoly.limiting_ratio(seqcore.general(seeds))
        assert abs(got - float(charpoly.golden_ratio(p))) < 1e-9


def test_power_ratios():
    # t_{n+k} / t_n -> Phi_p^k
    for p in (2, 3, 4):
        t = seqcore.terms(seqcore.make_family("exponent", p), 200)
        phi = float(charpoly.golden_ratio(p))
        for k in (1, 2, 3, 5):
            assert t[150 + k] / t[150] == pytest.approx(phi**k, rel=1e-12)


def test_ratio_cap():
    with pytest.raises(charpoly.RootError):
        charpoly.ratio_of_terms(iter(range(1, 10**6)), tol=1e-30, cap=50)


# -- classic families --------------------------------------------------------------

def test_metallic():
    rs = charpoly.classic_ratio("metallic", 4, 1)
    assert float(rs.dominant) == pytest.approx(2 + math.sqrt(5), abs=1e-12)
    assert rs.extra["closed_form"] == pytest.approx(((1 + math.sqrt(5)) / 2) ** 3, abs=1e-12)
    for p, q in [(1, 1), (2, 1), (3, 1), (1, 2), (5, 7)]:
        rs = charpoly.classic_ratio("metallic", p, q)
        assert float(rs.dominant) == pytest.approx(charpoly.metallic_mean(p, q), abs=1e-11)


def test_wilson():
    expected = ["1.61803", "1.46557", "1.32472", "1.38028", "1.22074", "1.32472", "1.23651", "1.19386", "1.16730"]
    got = [str(charpoly.round5(charpoly.classic_ratio("wilson", m).dominant)) for m in range(1, 10)]
    assert got == expected
    with pytest.raises(ValueError):
        charpoly.wilson_polynomial(10)


def test_stakhov_and_krcadinac():
    for p in range(0, 8):
        stakhov = charpoly.classic_ratio("stakhov", p).dominant
        assert abs(Decimal(str(sympy_positive_root(charpoly.stakhov_polynomial(p).coeffs))) - stakhov) < Decimal("1e-11")
    assert charpoly.classic_ratio("krcadinac_upper", 0).dominant == 1
    for p in range(1, 8):
        lower = charpoly.classic_ratio("krcadinac_lower", p).dominant
        upper = charpoly.classic_ratio("krcadinac_upper", p).dominant
        assert abs(lower**p - upper) < Decimal("1e-10")


def test_krcadinac_lower_sequence_ratio():
    # p = 2 lower sequence has characteristic x^3 - x - 1
    t = seqcore.krcadinac_terms(2, "lower", 61)
    assert t[60] / t[59] == pytest.approx(1.32472, abs=1e-5)


def test_cousins():
    # (b) has only non-positive real roots, and the alternating (a) family
    # can lose its positive root altogether
    for p in range(1, 10):
        assert charpoly.classic_ratio("cousin_b", p).dominant is None
    # (a) times (x + 1) is x^{p+1} + (-1)^p: every root is on the unit circle,
    # +1 is a root exactly when p is odd and there is no positive root otherwise
    for p in range(1, 12):
        rs = charpoly.classic_ratio("cousin_a", p)
        assert all(abs(abs(z) - 1) < 1e-8 for z in rs.roots)
        if p % 2:
            assert abs(rs.dominant - 1) < Decimal("1e-9")
        else:
            assert rs.dominant is None


def test_classic_kinds_reject_unknown():
    with pytest.raises(ValueError):
        charpoly.classic_polynomial("bronze", 1)


def test_round5_half_up():
    assert charpoly.round5(Decimal("1.234565")) == Decimal("1.23457")
    assert charpoly.round5(2, 3) == Decimal("2.000")
