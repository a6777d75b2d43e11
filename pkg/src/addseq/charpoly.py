"""Characteristic polynomials, their roots and the golden-ratio families.

Coefficients are exact integers.  Complex roots come from a simultaneous
(Durand-Kerner) iteration in binary64, while the positive real root that
matters for limiting ratios is pinned down by bisection on exact rational
evaluation and returned as a Decimal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from .seqcore import SequenceSpec, iter_terms

MAX_ITER = 1000
DEFAULT_TOL = 1e-10
BISECT_WIDTH = Fraction(1, 10**31)
RATIO_CAP = 10_000

# lag pairs of the nine merus: t_n = t_{n-a} + t_{n-b}
WILSON_LAGS = {
    1: (1, 2), 2: (1, 3), 3: (2, 3), 4: (1, 4), 5: (3, 4),
    6: (1, 5), 7: (2, 5), 8: (3, 5), 9: (4, 5),
}


class RootError(ArithmeticError):
    """Raised when a root cannot be bracketed or the iteration stalls."""


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, coefficients in ascending degree."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int]):
        c = [int(x) for x in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x):
        # Horner; works for int, Fraction, float, complex and numpy arrays
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def cauchy_bound(self) -> Fraction:
        """Every root has modulus below this bound."""
        lead = abs(self.leading)
        return 1 + max(Fraction(abs(c), lead) for c in self.coeffs[:-1]) if self.degree else Fraction(1)


@dataclass(frozen=True)
class RecurrenceSpec:
    """t_n = sum c_k t_{n - m_k} as a tuple of (coefficient, lag) pairs."""

    terms: tuple[tuple[int, int], ...]

    def __init__(self, terms: Sequence[tuple[int, int]]):
        t = tuple((int(c), int(m)) for c, m in terms)
        if not t:
            raise ValueError("a recurrence needs at least one term")
        lags = [m for _, m in t]
        if min(lags) < 1 or len(set(lags)) != len(lags):
            raise ValueError("lags must be positive and distinct")
        object.__setattr__(self, "terms", tuple(sorted(t, key=lambda cm: cm[1])))

    @property
    def order(self) -> int:
        return max(m for _, m in self.terms)

    def __str__(self) -> str:
        out = []
        for c, m in self.terms:
            coef = "" if c == 1 else f"{c}*"
            out.append(f"{coef}t_(n-{m})")
        return "t_n = " + " + ".join(out)


@dataclass
class RootSet:
    poly: IntPolynomial
    roots: list[complex]
    dominant: Decimal | None = None
    residual_bound: float = 0.0
    iterations: int = 0
    converged: bool = True
    extra: dict = field(default_factory=dict)

    def rows(self) -> list[tuple[float, float, float]]:
        return [(r.real, r.imag, abs(r)) for r in self.roots]


# -- construction --------------------------------------------------------------

def golden_polynomial(p: int) -> IntPolynomial:
    """x^p - (x^{p-1} + ... + x + 1)."""
    if p < 1:
        raise ValueError("p must be at least 1")
    return IntPolynomial([-1] * p + [1])


def char_poly(rec: RecurrenceSpec) -> IntPolynomial:
    """x^m - sum c_k x^{m - m_k} with m the largest lag."""
    m = rec.order
    coeffs = [0] * (m + 1)
    coeffs[m] = 1
    for c, lag in rec.terms:
        coeffs[m - lag] -= c
    return IntPolynomial(coeffs)


def stakhov_polynomial(p: int) -> IntPolynomial:
    """x^{p+1} - x^p - 1."""
    if p < 0:
        raise ValueError("p must be non-negative")
    c = [0] * (p + 2)
    c[0] -= 1
    c[p] -= 1
    c[p + 1] += 1
    return IntPolynomial(c)


def metallic_polynomial(p: int, q: int) -> IntPolynomial:
    if p < 0 or q < 0 or (p == 0 and q == 0):
        raise ValueError("need p, q >= 0 with at least one of them positive")
    return IntPolynomial([-q, -p, 1])


def metallic_mean(p: int, q: int) -> float:
    return (p + math.sqrt(p * p + 4 * q)) / 2


def krcadinac_polynomial(p: int, variant: str) -> IntPolynomial:
    """Lower: x^{p+1} - x - 1.  Upper: x (x - 1)^p - 1, expanded exactly."""
    if variant == "lower":
        if p < 1:
            raise ValueError("the lower polynomial needs p >= 1")
        c = [-1, -1] + [0] * p
        c[p + 1] += 1
        return IntPolynomial(c)
    if variant == "upper":
        if p < 0:
            raise ValueError("p must be non-negative")
        c = [-1] + [comb(p, j) * (-1) ** (p - j) for j in range(p + 1)]
        return IntPolynomial(c)
    raise ValueError("variant must be 'lower' or 'upper'")


def wilson_polynomial(meru: int) -> IntPolynomial:
    if meru not in WILSON_LAGS:
        raise ValueError(f"unknown meru {meru}; expected 1..9")
    a, b = WILSON_LAGS[meru]
    return char_poly(RecurrenceSpec([(1, a), (1, b)]))


def cousin_polynomial(p: int, variant: str) -> IntPolynomial:
    """(a): x^p - sum (-1)^{p-1-k} x^k.  (b): x^p + sum x^k."""
    if p < 1:
        raise ValueError("p must be at least 1")
    if variant == "a":
        return IntPolynomial([-((-1) ** (p - 1 - k)) for k in range(p)] + [1])
    if variant == "b":
        return IntPolynomial([1] * (p + 1))
    raise ValueError("variant must be 'a' or 'b'")


# -- root finding --------------------------------------------------------------

def _relative_residual(poly: IntPolynomial, z: np.ndarray) -> np.ndarray:
    # |P(z)| against the size of the terms being summed, so the measure is
    # meaningful when roots sit well outside the unit disc
    absz = np.abs(z)
    scale = np.zeros_like(absz)
    for c in reversed(poly.coeffs):
        scale = scale * absz + abs(c)
    return np.abs(poly(z)) / scale


def all_roots(poly: IntPolynomial, tol: float = DEFAULT_TOL) -> RootSet:
    """Every complex root of ``poly`` by Durand-Kerner iteration.

    Starting points sit on a circle of radius 1 + max|coef| (monic form)
    with an irrational angular offset.  Raises RootError when the iteration
    cap is hit; the exception carries the best estimate.
    """
    if poly.degree < 1:
        raise ValueError("polynomial must have degree >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = poly.degree
    monic = np.array(poly.coeffs, dtype=float) / poly.leading
    if n == 1:
        root = complex(-monic[0])
        return RootSet(poly, [root], residual_bound=0.0, iterations=0)
    radius = 1 + float(np.max(np.abs(monic[:-1])))
    offset = math.sqrt(2) / 3
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + offset))
    coeffs_desc = monic[::-1].astype(complex)

    it = 0
    for it in range(1, MAX_ITER + 1):
        pz = np.polyval(coeffs_desc, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        step = pz / np.prod(diff, axis=1)
        z = z - step
        if np.max(np.abs(step) / np.maximum(1.0, np.abs(z))) < tol * 1e-3:
            break
    resid = float(np.max(_relative_residual(poly, z)))
    # Newton polish in complex128 to tidy up the last bits
    deriv = np.polyder(coeffs_desc)
    for _ in range(3):
        d = np.polyval(deriv, z)
        ok = d != 0
        z = np.where(ok, z - np.polyval(coeffs_desc, z) / np.where(ok, d, 1), z)
    resid = min(resid, float(np.max(_relative_residual(poly, z))))
    roots = sorted((complex(r) for r in z), key=lambda r: (-abs(r), -r.real, r.imag))
    # snap tiny imaginary parts left over from the complex arithmetic
    roots = [complex(r.real, 0.0) if abs(r.imag) < 1e-14 * max(1.0, abs(r)) else r for r in roots]
    result = RootSet(poly, roots, residual_bound=resid, iterations=it, converged=resid < tol)
    if not result.converged:
        err = RootError(f"no convergence after {it} iterations (residual {resid:.3g})")
        err.best = result
        raise err
    return result


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def dominant_root(poly: IntPolynomial, bracket: tuple | None = None) -> Decimal:
    """Positive real root by bisection on exact rational values.

    The default bracket is (0, Cauchy bound].  The result is the midpoint of
    a final interval narrower than 1e-31, so all 30 digits are correct.
    """
    lo, hi = (Fraction(0), poly.cauchy_bound()) if bracket is None else (Fraction(bracket[0]), Fraction(bracket[1]))
    flo, fhi = _sign(poly(lo)), _sign(poly(hi))
    if flo == 0:
        return _to_decimal(lo)
    if fhi == 0:
        return _to_decimal(hi)
    if flo == fhi:
        raise RootError(f"no sign change on [{float(lo)}, {float(hi)}]")
    while hi - lo >= BISECT_WIDTH:
        mid = (lo + hi) / 2
        fm = _sign(poly(mid))
        if fm == 0:
            return _to_decimal(mid)
        if fm == flo:
            lo = mid
        else:
            hi = mid
    return _to_decimal((lo + hi) / 2)


def _to_decimal(x: Fraction) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = 30
        return Decimal(x.numerator) / Decimal(x.denominator)


def golden_ratio(p: int) -> Decimal:
    """Phi_p, the positive root of the golden polynomial of order p."""
    if p == 1:
        return Decimal(1)
    return dominant_root(golden_polynomial(p), (1, 2))


def round5(x, digits: int = 5) -> Decimal:
    """Half-up rounding used when matching printed tables."""
    return Decimal(str(x)).quantize(Decimal(1).scaleb(-digits), rounding="ROUND_HALF_UP")


# -- ratios from sequences -----------------------------------------------------

def _scaled_ratio(a: int, b: int) -> float:
    # a/b through integer division, safe for arbitrarily large terms
    return (a * 10**15 // b) / 1e15


def limiting_ratio(spec: SequenceSpec, tol: float = 1e-12) -> float:
    """Iterate t_{n+1}/t_n until successive ratios settle within ``tol``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if any(s < 0 for s in spec.seeds) or not any(spec.seeds) and spec.increment == 0:
        raise ValueError("seeds must be non-negative and not all zero")
    if spec.family == "one":
        # (s0 + (n+1) a) / (s0 + n a) -> 1, only algebraically fast
        return 1.0
    # a p-sequence can double for up to p steps in a row during start-up, so
    # one small difference between successive ratios proves nothing
    return ratio_of_terms(iter_terms(spec), tol, streak=spec.p + 1)


def ratio_of_terms(stream, tol: float = 1e-12, cap: int = RATIO_CAP, streak: int = 1) -> float:
    """t_{n+1}/t_n once ``streak`` successive differences fall below ``tol``."""
    prev_ratio = None
    run = 0
    prev = next(stream)
    for n, cur in enumerate(stream):
        if n > cap:
            raise RootError(f"ratio did not settle within {cap} terms")
        if prev > 0:
            r = _scaled_ratio(cur, prev)
            run = run + 1 if prev_ratio is not None and abs(r - prev_ratio) < tol else 0
            if run >= streak:
                return r
            prev_ratio = r
        prev = cur
    raise RootError("sequence ended")  # pragma: no cover


# -- classic families ----------------------------------------------------------

CLASSIC_KINDS = ("stakhov", "metallic", "krcadinac_lower", "krcadinac_upper", "wilson", "cousin_a", "cousin_b")


def classic_polynomial(kind: str, *params: int) -> IntPolynomial:
    if kind == "stakhov":
        return stakhov_polynomial(*params)
    if kind == "metallic":
        return metallic_polynomial(*params)
    if kind == "krcadinac_lower":
        return krcadinac_polynomial(params[0], "lower")
    if kind == "krcadinac_upper":
        return krcadinac_polynomial(params[0], "upper")
    if kind == "wilson":
        return wilson_polynomial(*params)
    if kind == "cousin_a":
        return cousin_polynomial(params[0], "a")
    if kind == "cousin_b":
        return cousin_polynomial(params[0], "b")
    raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(CLASSIC_KINDS)}")


def classic_ratio(kind: str, *params: int, tol: float = DEFAULT_TOL) -> RootSet:
    """Roots of one of the classic generalised golden equations.

    ``dominant`` is the largest positive real root when one exists.
    """
    poly = classic_polynomial(kind, *params)
    rs = all_roots(poly, tol)
    positive = [r.real for r in rs.roots if r.imag == 0 and r.real > 0]
    if positive:
        top = max(positive)
        # bracket the largest positive root tightly around the float estimate
        lo, hi = Fraction(top) - Fraction(1, 10**6), Fraction(top) + Fraction(1, 10**6)
        try:
            rs.dominant = dominant_root(poly, (max(lo, Fraction(0)), hi))
        except RootError:
            rs.dominant = Decimal(repr(top))
    if kind == "metallic":
        rs.extra["closed_form"] = metallic_mean(*params)
    return rs


def roots_csv_rows(rs: RootSet, digits: int = 5) -> list[list[str]]:
    return [[f"{re:.{digits}f}", f"{im:.{digits}f}", f"{mod:.{digits}f}"] for re, im, mod in rs.rows()]
