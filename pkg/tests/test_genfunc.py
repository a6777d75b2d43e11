import pytest
import sympy
from hypothesis import given, strategies as st

from addseq import genfunc, seqcore
from addseq.charpoly import IntPolynomial
from addseq.genfunc import RationalGF

X = sympy.Symbol("x")


def named_specs(p_max=5):
    for p in range(1, p_max + 1):
        for fam in ("coefficient", "exponent", "syllable"):
            yield seqcore.make_family(fam, p)
        for k in range(p):
            yield seqcore.make_family("k", p, k)


def test_numerators():
    gf = genfunc.gf_from_spec(seqcore.make_family("exponent", 2))
    assert gf.numerator.coeffs == (0, 1) and gf.denominator.coeffs == (1, -1, -1)
    gf5 = genfunc.gf_from_spec(seqcore.make_family("exponent", 5))
    assert gf5.numerator.coeffs == (0, 1, 1, 0, -2)
    assert gf5.denominator.coeffs == (1, -1, -1, -1, -1, -1)
    assert genfunc.gf_from_spec(seqcore.make_family("k", 2, 0)).numerator.coeffs == (1, -1)
    assert genfunc.gf_from_spec(seqcore.make_family("exponent", 3)).numerator.coeffs == (0, 1, 1)
    assert genfunc.gf_from_spec(seqcore.make_family("exponent", 4)).numerator.coeffs == (0, 1, 1)


def test_series_examples():
    f_x2 = genfunc.gf_from_spec(seqcore.make_family("exponent", 2))
    assert genfunc.series_coeffs(f_x2, 11) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    f_x3 = genfunc.gf_from_spec(seqcore.make_family("exponent", 3))
    assert genfunc.series_coeffs(f_x3, 11)[10] == 230
    one = RationalGF(IntPolynomial([1]), IntPolynomial([1]))
    assert genfunc.series_coeffs(one, 5) == [1, 0, 0, 0, 0]


def test_round_trip_named_families():
    for spec in named_specs():
        gf = genfunc.gf_from_spec(spec)
        assert genfunc.series_coeffs(gf, 64) == seqcore.terms(spec, 64), spec.label


def test_sympy_series_oracle():
    for spec in named_specs(3):
        gf = genfunc.gf_from_spec(spec)
        num = sum(c * X**k for k, c in enumerate(gf.numerator.coeffs))
        den = sum(c * X**k for k, c in enumerate(gf.denominator.coeffs))
        series = sympy.series(num / den, X, 0, 16).removeO()
        assert [int(series.coeff(X, k)) for k in range(16)] == seqcore.terms(spec, 16)


@given(st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=6))
def test_round_trip_random(seeds):
    spec = seqcore.general(seeds)
    assert genfunc.series_coeffs(genfunc.gf_from_spec(spec), 40) == seqcore.terms(spec, 40)


def test_rejects():
    with pytest.raises(ValueError):
        RationalGF(IntPolynomial([1]), IntPolynomial([2, 1]))
    with pytest.raises(ValueError):
        genfunc.gf_from_spec(seqcore.one_sequence(0, 1))
    with pytest.raises(ValueError):
        genfunc.series_coeffs(genfunc.gf_from_spec(seqcore.make_family("exponent", 2)), -1)
