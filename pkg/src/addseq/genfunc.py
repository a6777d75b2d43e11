"""Rational generating functions of p-sequences.

f(x) = sum t_n x^n equals N(x) / (1 - x - x^2 - ... - x^p) where the
numerator has degree below p.  Coefficients are recovered by formal power
series division over the integers (the denominator starts with 1).
"""
from __future__ import annotations

from dataclasses import dataclass

from .charpoly import IntPolynomial
from .seqcore import SequenceSpec


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self):
        if self.denominator.coeffs[0] != 1:
            raise ValueError("denominator must have constant term 1")

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator})"


def gf_from_spec(spec: SequenceSpec) -> RationalGF:
    """Numerator coefficient k is t_k - (t_0 + ... + t_{k-1})."""
    if spec.family == "one":
        raise ValueError("use a p-sequence with p >= 1 and explicit seeds")
    s = spec.seeds
    num = [s[k] - sum(s[:k]) for k in range(spec.p)]
    den = [1] + [-1] * spec.p
    return RationalGF(IntPolynomial(num), IntPolynomial(den))


def series_coeffs(gf: RationalGF, count: int) -> list[int]:
    """First ``count`` power-series coefficients of numerator / denominator."""
    if count < 0:
        raise ValueError("count must be non-negative")
    num, den = gf.numerator.coeffs, gf.denominator.coeffs
    out: list[int] = []
    for n in range(count):
        c = num[n] if n < len(num) else 0
        # den[0] == 1, so no division is needed
        c -= sum(den[j] * out[n - j] for j in range(1, min(n, len(den) - 1) + 1))
        out.append(c)
    return out
