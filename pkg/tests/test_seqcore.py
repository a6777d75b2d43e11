import itertools

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from addseq import seqcore
from addseq.seqcore import make_family, term, terms


def brute_terms(seeds, count):
    # straight from the definition: each term sums the p before it
    t = list(seeds)
    while len(t) < count:
        t.append(sum(t[-len(seeds):]))
    return t[:count]


def test_family_seeds():
    assert make_family("exponent", 3).seeds == (0, 1, 2)
    assert make_family("syllable", 4).seeds == (1, 2, 4, 8)
    assert make_family("k", 2, 0).seeds == (1, 0)
    assert make_family("coefficient", 3).seeds == (1, 1, 1)


@pytest.mark.parametrize("args", [("exponent", 0), ("k", 3, 3), ("k", 3, -1), ("k", 3, None), ("general", 2)])
def test_family_rejects(args):
    with pytest.raises(ValueError):
        make_family(*args)


def test_spec_invariants():
    with pytest.raises(ValueError):
        seqcore.SequenceSpec(3, (1, 2))
    with pytest.raises(ValueError):
        seqcore.one_sequence(0, -1)


def test_known_terms():
    assert term(make_family("exponent", 2), 10) == 55
    assert term(make_family("coefficient", 3), 10) == 193
    assert term(make_family("syllable", 5), 25) == 23099186
    assert term(make_family("k", 4, 0), 0) == 1


def test_one_sequence():
    assert seqcore.one_seq_term(0, 1, 99) == 99
    assert seqcore.one_seq_term(5, 0, 7) == 5
    assert seqcore.one_seq_term(3, 2, 4) == 11
    assert terms(seqcore.one_sequence(3, 2), 4) == [3, 5, 7, 9]
    assert term(seqcore.one_sequence(3, 2), 4) == 11


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=6), st.integers(0, 60))
def test_terms_match_definition(seeds, n):
    spec = seqcore.general(seeds)
    assert terms(spec, n + 1) == brute_terms(seeds, n + 1)
    assert term(spec, n) == brute_terms(seeds, n + 1)[n]


@settings(max_examples=60)
@given(st.lists(st.integers(0, 10**6), min_size=1, max_size=6), st.integers(0, 200))
def test_decomposition(seeds, n):
    assert seqcore.k_decomposition_check(seeds, len(seeds), n)


def test_decomposition_examples():
    assert seqcore.k_decomposition_check((2, 21), 2, 10)
    assert term(seqcore.general((2, 21)), 10) == 1223 == 34 * 2 + 55 * 21
    assert sum(term(make_family("k", 3, k), 25) for k in range(3)) == 1800281


@given(st.lists(st.integers(0, 1000), min_size=2, max_size=6).filter(any), st.integers(0, 80))
def test_growth(seeds, extra):
    p = len(seeds)
    t = terms(seqcore.general(seeds), 2 * p + extra + 2)
    n = 2 * p + extra
    assert t[n] < t[n + 1] < 2 * t[n]


def test_shift_relations():
    s2, s0, ss = (terms(make_family(*a), 40) for a in (("k", 3, 2), ("k", 3, 0), ("syllable", 3)))
    # S_0(3) is S_2(3) delayed by one step
    assert seqcore.find_shift(s0, s2) == 1
    # S_S(3) runs three steps ahead of S_2(3)
    assert seqcore.find_shift(ss, s2) == -3
    s1, sx = terms(make_family("k", 3, 1), 40), terms(make_family("exponent", 3), 40)
    # seeds (0,1,0) reach 0,1,2 at n = 2, so S_X(3) is S_1(3) advanced by two
    assert seqcore.find_shift(s1, sx) == 2
    sc = terms(make_family("coefficient", 3), 40)
    assert seqcore.find_shift(s0, sc) is None


def test_compositions():
    assert seqcore.compositions_count(5, 2) == 8
    assert seqcore.compositions_count(4, 3) == 7
    assert all(seqcore.compositions_count(1, p) == 1 for p in range(1, 6))
    with pytest.raises(ValueError):
        seqcore.compositions_count(26, 2)


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_composition_oracle(p):
    syl = terms(make_family("syllable", p), 21)
    for n in range(1, 21):
        count = seqcore.compositions_count(n, p)
        assert count == syl[n - 1]
        if n <= 8:
            # independent enumeration over all tuples
            brute = sum(1 for k in range(1, n + 1) for c in itertools.product(range(1, p + 1), repeat=k) if sum(c) == n)
            assert seqcore.compositions_count(n, p, brute=True) == brute == count


def test_multiplicities():
    classes = dict(seqcore.composition_classes(5, 2))
    assert classes == {(5, 0): 1, (3, 1): 4, (1, 2): 3}


def test_stakhov():
    assert seqcore.stakhov_term(2, 9) == 19
    assert seqcore.stakhov_term(0, 9) == 512
    assert seqcore.stakhov_binomial(2, 6) == 6 == seqcore.stakhov_term(2, 6)
    for p in range(0, 6):
        for n in range(40):
            assert seqcore.stakhov_binomial(p, n) == seqcore.stakhov_term(p, n)


def test_krcadinac():
    upper = seqcore.krcadinac_terms(1, "upper", 30)
    assert all(upper[n] == upper[n - 1] + upper[n - 2] for n in range(2, 30))
    lower = seqcore.krcadinac_terms(1, "lower", 30)
    assert all(lower[n] == lower[n - 1] + lower[n - 2] for n in range(2, 30))
    f = seqcore.krcadinac_terms(2, "lower", 62)
    assert f[61] / f[60] == pytest.approx(1.32472, abs=1e-5)
    with pytest.raises(ValueError):
        seqcore.krcadinac_terms(0, "lower", 5)


def test_fib_lucas():
    assert seqcore.fib_lucas(10) == (55, 123)
    assert seqcore.fib_lucas(0) == (0, 2)
    f, l = seqcore.fibonacci_lucas(203)
    for n in range(1, 201):
        assert (f[n], l[n]) == (sympy.fibonacci(n), sympy.lucas(n))
        assert l[n] == f[n + 1] + f[n - 1] == 2 * f[n + 1] - f[n]
        assert f[n] + f[n + 2] == l[n + 1]
        assert l[n] + l[n + 2] == 5 * f[n + 1]
