"""Closed-form sums over exponent p-sequences, checked against direct sums.

Every function returns a SumReport that holds the direct sum, the value of
the closed form and their difference.  Closed forms that involve division
are evaluated as exact fractions, so a wrong formula shows up as a
non-zero (possibly fractional) residual rather than a rounding artefact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .seqcore import make_family, terms

PRODUCT_FORMS = ("A", "B", "cyclic")
# candidate summation ranges for the p = 3 cyclic product sum, as (first i, last i)
CYCLIC_RANGES = {"0..n-1": (0, -1), "1..n-1": (1, -1), "1..n": (1, 0)}


@dataclass(frozen=True)
class SumReport:
    naive: int
    closed: Rational
    residual: Rational

    @classmethod
    def of(cls, naive: int, closed) -> "SumReport":
        closed = Fraction(closed)
        if closed.denominator == 1:
            closed = closed.numerator
        residual = closed - naive
        if isinstance(residual, Fraction) and residual.denominator == 1:
            residual = residual.numerator
        return cls(naive, closed, residual)

    @property
    def exact(self) -> bool:
        return self.residual == 0


class _Ext:
    """Terms of a p-sequence with the recurrence run backwards for n < 0."""

    def __init__(self, family: str, p: int, k: int | None = None, upto: int = 64):
        self.p = p
        self.fwd = terms(make_family(family, p, k), max(upto, p) + 1)
        self.back: list[int] = []  # back[j] = t_{-1-j}

    def __getitem__(self, n: int) -> int:
        if n >= 0:
            return self.fwd[n]
        while len(self.back) < -n:
            m = -1 - len(self.back)
            # t_m = t_{m+p} - (t_{m+1} + ... + t_{m+p-1})
            self.back.append(self[m + self.p] - sum(self[m + j] for j in range(1, self.p)))
        return self.back[-n - 1]


def _check_n(n: int):
    if n < 1:
        raise ValueError("n must be positive")


# -- sum of the first n terms --------------------------------------------------

def general_sum_forms(p: int, n: int) -> dict[str, int]:
    """The four equivalent right-hand sides for (p-1) * (t_1 + ... + t_n).

    Form 1 reaches back to t_{n-p+1}; forms 2 and 3 need n >= p-2 and
    n >= p-3.  Form 4 only looks forward and holds for every n >= 1.
    Forms whose indices would go negative are omitted.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    _check_n(n)
    t = _Ext("exponent", p, upto=n + p + 2)
    c = t[p] - sum((p - 1 - k) * t[k] for k in range(1, p - 1))
    out = {}
    if n - (p - 1) >= 0:
        out["1"] = sum((p - k) * t[n - k] for k in range(p)) - c
    if n - (p - 2) >= 0:
        out["2"] = t[n + 1] + sum((p - 1 - k) * t[n - k] for k in range(p - 1)) - c
    if n - (p - 3) >= 0:
        out["3"] = t[n + 2] + sum((p - 2 - k) * t[n - k] for k in range(p - 2)) - c
    out["4"] = t[n + p] - sum((p - 1 - k) * t[n + k] for k in range(1, p - 1)) - c
    return out


def printed_fourth_form(p: int, n: int) -> int:
    """The fourth form with a plus sign in front of the forward sum."""
    t = _Ext("exponent", p, upto=n + p + 2)
    c = t[p] - sum((p - 1 - k) * t[k] for k in range(1, p - 1))
    return t[n + p] + sum((p - 1 - k) * t[n + k] for k in range(1, p - 1)) - c


def sum_first_n(p: int, n: int, s0: int = 0, a: int = 1) -> SumReport:
    """t_1 + ... + t_n of S_X(p); for p = 1, t_0 + ... + t_n of s0 + k a."""
    if not 1 <= p <= 6:
        raise ValueError("p must be in 1..6")
    if p == 1:
        if n < 0:
            raise ValueError("n must be non-negative")
        naive = sum(s0 + k * a for k in range(n + 1))
        return SumReport.of(naive, Fraction((n + 1) * (2 * s0 + n * a), 2))
    _check_n(n)
    t = _Ext("exponent", p, upto=n + p + 2)
    naive = sum(t[k] for k in range(1, n + 1))
    if p == 2:
        closed = t[n + 2] - t[2]
    elif p == 3:
        closed = Fraction(t[n + 2] + t[n] - (t[3] - t[1]), 2)
    elif p == 4:
        closed = Fraction(t[n + 2] + 2 * t[n] + t[n - 1] - (t[3] - t[1]), 3)
    else:
        closed = Fraction(general_sum_forms(p, n)["4"], p - 1)
    return SumReport.of(naive, closed)


# -- odd and even sums ---------------------------------------------------------

def _odd_even_closed(p: int, parity: str, n: int, t: _Ext, corrected: bool) -> Fraction:
    m = 2 * n
    if p == 2:
        return Fraction(t[m]) if parity == "odd" else Fraction(t[m + 1] - 1)
    if p == 3:
        if parity == "odd":
            return Fraction(t[m] + t[m - 1] - 1, 2)
        return Fraction(t[m + 1] + t[m] - 1, 2)
    if p == 4:
        if corrected:
            if parity == "odd":
                return Fraction(-t[m + 1] + 3 * t[m] + t[m - 1] + 2 * t[m - 2] - 1, 3)
            return Fraction(2 * t[m + 1] + t[m - 1] - t[m - 2] - 1, 3)
        if parity == "odd":
            return Fraction(t[m + 1] + t[m - 2] - 2, 3)
        return Fraction(3 * t[m] + 2 * t[m - 1], 3)
    # p == 5
    if corrected:
        if parity == "odd":
            return Fraction(-t[m + 3] + 4 * t[m + 2] - 3 * t[m + 1] + 2 * t[m] + 3 * t[m - 1] + 4, 8)
        return Fraction(3 * t[m + 3] - 4 * t[m + 2] + t[m + 1] + 2 * t[m] - t[m - 1] - 4, 8)
    if parity == "odd":
        return Fraction(t[m + 1] + t[m - 1] + t[m - 2] + t[m - 3], 4)
    return Fraction(4 * t[m] + 2 * t[m - 1] + t[m - 2], 4)


def odd_even_sum(p: int, parity: str, n: int, corrected: bool = False) -> SumReport:
    """Sum of t_1, t_3, ... (odd) or t_2, t_4, ... (even), n terms, of S_X(p).

    With ``corrected=False`` the closed forms are the long-standing ones; for
    p = 4 and 5 those only agree for a couple of n.  ``corrected=True``
    swaps in identities for p = 4, 5 that hold for every n >= 1.
    """
    if not 2 <= p <= 5:
        raise ValueError("p must be in 2..5")
    if parity not in ("odd", "even"):
        raise ValueError("parity must be 'odd' or 'even'")
    _check_n(n)
    t = _Ext("exponent", p, upto=2 * n + 4)
    first = 1 if parity == "odd" else 2
    naive = sum(t[first + 2 * i] for i in range(n))
    return SumReport.of(naive, _odd_even_closed(p, parity, n, t, corrected))


# -- sums of squares -----------------------------------------------------------

def sum_squares(p: int, n: int, s0: int = 0, a: int = 1) -> SumReport:
    """Sum of squares of the first n terms.

    For p = 4 the closed form is only approximate and ``residual`` is the
    signed correction (closed - naive).
    """
    if not 1 <= p <= 4:
        raise ValueError("p must be in 1..4")
    if p == 1:
        if n < 0:
            raise ValueError("n must be non-negative")
        naive = sum((s0 + k * a) ** 2 for k in range(n + 1))
        closed = (n + 1) * (s0 * s0 + n * s0 * a + Fraction(n * (2 * n + 1), 6) * a * a)
        return SumReport.of(naive, closed)
    _check_n(n)
    t = _Ext("exponent", p, upto=n + 3)
    naive = sum(t[k] ** 2 for k in range(1, n + 1))
    closed = t[n] * t[n + 1]
    if p == 3:
        closed -= _Ext("k", 3, 2, upto=n + 2)[n + 1] ** 2
    elif p == 4:
        s3 = _Ext("k", 4, 3, upto=n + 3)
        closed -= (s3[n + 2] + s3[n - 1]) ** 2
    return SumReport.of(naive, closed)


# -- product sums ----------------------------------------------------------------

def _cyclic(t: _Ext, i: int) -> int:
    return t[i] * t[i + 1] + t[i + 1] * t[i + 2] + t[i + 2] * t[i]


def product_sums(p: int, form: str, n: int, summation: str = "1..n-1") -> SumReport:
    """Sums of products of neighbouring terms of S_X(p).

    p = 2, form "A": sum t_i t_{i+1} against (t_{n+2}^2 - t_n t_{n+1} - t_2^2) / 2.
    p = 2, form "B": the same sum against sum (n + 1 - j) t_j^2.
    p = 3, form "cyclic": sum of t_i t_{i+1} + t_{i+1} t_{i+2} + t_{i+2} t_i over
    the chosen ``summation`` range against the half-bracket closed form.
    """
    _check_n(n)
    if form not in PRODUCT_FORMS:
        raise ValueError(f"unknown form {form!r}")
    if (p == 2) != (form in ("A", "B")) or p not in (2, 3):
        raise ValueError("forms A and B need p = 2, cyclic needs p = 3")
    t = _Ext("exponent", p, upto=n + 4)
    if p == 2:
        naive = sum(t[i] * t[i + 1] for i in range(1, n + 1))
        if form == "A":
            closed = Fraction(t[n + 2] ** 2 - t[n] * t[n + 1] - t[2] ** 2, 2)
        else:
            closed = sum((n + 1 - j) * t[j] ** 2 for j in range(1, n + 1))
        return SumReport.of(naive, closed)
    if summation not in CYCLIC_RANGES:
        raise ValueError(f"summation must be one of {', '.join(CYCLIC_RANGES)}")
    lo, hi_off = CYCLIC_RANGES[summation]
    naive = sum(_cyclic(t, i) for i in range(lo, n + hi_off + 1))
    closed = Fraction(t[n + 2] * (t[n + 2] - 1) + t[n] * (t[n] - 1) - (t[3] - t[1]) * (t[3] + t[1] - 1), 2)
    return SumReport.of(naive, closed)


def cyclic_range_search(n_max: int = 30) -> str | None:
    """The summation range that makes the p = 3 cyclic identity exact for
    every 1 <= n <= n_max, or None when no candidate does."""
    for name in CYCLIC_RANGES:
        if all(product_sums(3, "cyclic", n, name).exact for n in range(1, n_max + 1)):
            return name
    return None
