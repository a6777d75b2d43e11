"""Exact arithmetic in Q(sqrt 5) and the number-theoretic golden-ratio facts.

QuadraticSurd keeps both components as Fractions, so Binet's formula,
powers of the golden ratio and their continued fractions are all exact.
Anything about Phi_p for p >= 3 is numeric and goes through charpoly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt

from .charpoly import golden_ratio
from .seqcore import fib_lucas, make_family, terms

CF_MAX_DEPTH = 64


@dataclass(frozen=True)
class QuadraticSurd:
    """u + v sqrt(5) with rational u, v."""

    u: Fraction
    v: Fraction = Fraction(0)

    def __init__(self, u=0, v=0):
        object.__setattr__(self, "u", Fraction(u))
        object.__setattr__(self, "v", Fraction(v))

    def __add__(self, other):
        other = _lift(other)
        return QuadraticSurd(self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.u, -self.v)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        o = _lift(other)
        return QuadraticSurd(self.u * o.u + 5 * self.v * o.v, self.u * o.v + self.v * o.u)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.u * self.u - 5 * self.v * self.v

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.u, -self.v)

    def inverse(self) -> "QuadraticSurd":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("surd is zero")
        c = self.conjugate()
        return QuadraticSurd(c.u / n, c.v / n)

    def __truediv__(self, other):
        return self * _lift(other).inverse()

    def __rtruediv__(self, other):
        return _lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** -n
        result, base = QuadraticSurd(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __float__(self):
        return float(self.u) + float(self.v) * math.sqrt(5)

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def sign(self) -> int:
        """Exact sign of u + v sqrt 5."""
        su, sv = (self.u > 0) - (self.u < 0), (self.v > 0) - (self.v < 0)
        if su == sv or sv == 0:
            return su
        if su == 0:
            return sv
        # opposite signs: compare u^2 with 5 v^2
        return su if self.u * self.u > 5 * self.v * self.v else -su

    def __lt__(self, other):
        return (self - _lift(other)).sign() < 0

    def floor(self) -> int:
        """Exact floor, using isqrt on the integer form (P + Q sqrt 5) / R."""
        r = math.lcm(self.u.denominator, self.v.denominator)
        pp, qq = int(self.u * r), int(self.v * r)
        # floor(Q sqrt 5) exactly
        q5 = isqrt(5 * qq * qq)
        if qq < 0:
            q5 = -q5 - (0 if q5 * q5 == 5 * qq * qq else 1)
        return (pp + q5) // r

    def __str__(self):
        if self.v == 0:
            return str(self.u)
        return f"{self.u} + {self.v}*sqrt(5)" if self.v > 0 else f"{self.u} - {-self.v}*sqrt(5)"


def _lift(x) -> QuadraticSurd:
    return x if isinstance(x, QuadraticSurd) else QuadraticSurd(x)


PHI = QuadraticSurd(Fraction(1, 2), Fraction(1, 2))
SQRT5 = QuadraticSurd(0, 1)


def surd_arith(a: QuadraticSurd, b, op: str) -> QuadraticSurd:
    """op is 'add', 'mul' or 'pow' (b is then a non-negative int)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "pow":
        if b < 0:
            raise ValueError("exponent must be non-negative")
        return a ** b
    raise ValueError(f"unknown op {op!r}")


def phi_power_surd(n: int) -> QuadraticSurd:
    if n < 0:
        raise ValueError("n must be non-negative")
    return PHI ** n


def binet(n: int) -> int:
    """(Phi^n - (-phi)^n) / sqrt 5 in exact arithmetic."""
    if n < 0:
        raise ValueError("n must be non-negative")
    small_phi = PHI - 1
    value = (PHI ** n - (-small_phi) ** n) / SQRT5
    if value.v != 0 or value.u.denominator != 1:
        raise ArithmeticError("Binet value is not an integer")  # pragma: no cover
    return value.u.numerator


# -- continued fractions ---------------------------------------------------------

@dataclass(frozen=True)
class ContinuedFraction:
    head: int
    tail: tuple[int, ...] = ()
    periodic_tail: tuple[int, ...] | None = None
    complete: bool = True  # False when max_depth ran out before a period showed

    def quotients(self, count: int) -> list[int]:
        """First ``count`` partial quotients, unrolling the period."""
        out = [self.head, *self.tail]
        if self.periodic_tail:
            i = 0
            while len(out) < count:
                out.append(self.periodic_tail[i % len(self.periodic_tail)])
                i += 1
        return out[:count]

    def __str__(self):
        body = ", ".join(map(str, self.tail))
        if self.periodic_tail:
            per = "(" + ", ".join(map(str, self.periodic_tail)) + ")*"
            body = f"{body}, {per}" if body else per
        return f"[{self.head}; {body}]" if body else f"[{self.head}]"


def cf_expand(x, max_depth: int = CF_MAX_DEPTH) -> ContinuedFraction:
    """Continued fraction of a rational or a surd, period detected by state."""
    x = _lift(x)
    quotients: list[int] = []
    seen: dict[QuadraticSurd, int] = {}
    while len(quotients) < max_depth:
        if not x.is_rational:
            if x in seen:
                start = seen[x]
                if start == 0:
                    # purely periodic: the head opens the period, so rotate it
                    quotients.append(quotients[0])
                    start = 1
                return ContinuedFraction(quotients[0], tuple(quotients[1:start]), tuple(quotients[start:]))
            seen[x] = len(quotients)
        a = x.floor()
        quotients.append(a)
        frac = x - a
        if frac.u == 0 and frac.v == 0:
            return ContinuedFraction(quotients[0], tuple(quotients[1:]))
        x = frac.inverse()
    return ContinuedFraction(quotients[0], tuple(quotients[1:]), None, complete=False)


def convergent(cf: ContinuedFraction, m: int) -> Fraction:
    """The m-th convergent, counting [a_0; a_1, ..., a_{m-1}] as the m-th."""
    if m < 1:
        raise ValueError("m must be positive")
    available = 1 + len(cf.tail)
    if not cf.periodic_tail and m > available:
        raise ValueError(f"expansion has only {available} partial quotients")
    q = cf.quotients(m)
    h0, h1, k0, k1 = 1, q[0], 0, 1
    for a in q[1:]:
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
    return Fraction(h1, k1)


def phi_power_cf_pattern(n: int) -> ContinuedFraction:
    """Expected expansion of Phi^n: [l_n; l_n repeating] for odd n and
    [l_n - 1; 1, l_n - 2 repeating] for even n."""
    if n < 1:
        raise ValueError("n must be positive")
    _, l = fib_lucas(n)
    if n % 2:
        return ContinuedFraction(l, (), (l,))
    if l - 2 == 1:
        return ContinuedFraction(l - 1, (), (1,))
    return ContinuedFraction(l - 1, (), (1, l - 2))


def same_expansion(a: ContinuedFraction, b: ContinuedFraction, count: int = 40) -> bool:
    return a.quotients(count) == b.quotients(count)


def phi_power_convergent_positions(a: int, n_max: int = 6) -> list[tuple[int, int | None]]:
    """For each n <= n_max, where f_{a(n+1)} / f_{an} shows up among the
    convergents of Phi^a (position m, counted as in ``convergent``), or None."""
    cf = cf_expand(phi_power_surd(a))
    out = []
    for n in range(1, n_max + 1):
        target = Fraction(fib_lucas(a * (n + 1))[0], fib_lucas(a * n)[0])
        pos = next((m for m in range(1, 4 * n_max + 4) if convergent(cf, m) == target), None)
        out.append((n, pos))
    return out


# -- Phi_p^n as a polynomial in Phi_p ---------------------------------------------

@dataclass(frozen=True)
class PhiPowerReduction:
    p: int
    n: int
    coeffs: tuple[int, ...]  # coefficient of Phi_p^k at index k

    def evaluate(self, phi: float) -> float:
        return sum(c * phi**k for k, c in enumerate(self.coeffs))


def phi_power_reduce(p: int, n: int) -> PhiPowerReduction:
    """Phi_p^n = sum_k t_n[S_k(p)] Phi_p^k."""
    if p < 2:
        raise ValueError("p must be at least 2")
    if n < 0:
        raise ValueError("n must be non-negative")
    coeffs = tuple(terms(make_family("k", p, k), n + 1)[n] for k in range(p))
    return PhiPowerReduction(p, n, coeffs)


def reduction_alternates(p: int, n: int) -> list[tuple[int, ...]]:
    """Alternative coefficient vectors built from other families.

    p = 2 (n >= 2): (t_n[S_0], t_{n+1}[S_0]) and (t_{n-1}[S_X], t_n[S_X]).
    p = 3 (n >= 4): (t_{n-4}[S_S], t_{n-2}[S_X], t_{n-3}[S_S]).
    """
    if p == 2 and n >= 2:
        s0 = terms(make_family("k", 2, 0), n + 2)
        sx = terms(make_family("exponent", 2), n + 1)
        return [(s0[n], s0[n + 1]), (sx[n - 1], sx[n])]
    if p == 3 and n >= 4:
        ss = terms(make_family("syllable", 3), n + 1)
        sx = terms(make_family("exponent", 3), n + 1)
        return [(ss[n - 4], sx[n - 2], ss[n - 3])]
    return []


# -- angles, series, recursions --------------------------------------------------

def golden_angle(p: int, radians: bool = False) -> float:
    """360 / (1 + Phi_p) degrees."""
    if p < 1:
        raise ValueError("p must be at least 1")
    phi = float(golden_ratio(p))
    return 2 * math.pi / (1 + phi) if radians else 360.0 / (1 + phi)


def phi_series_partial(N: int) -> float:
    """13/8 + sum_{n<N} (-1)^{n+1} (2n+1)! / (n! (n+2)! 4^{2n+3})."""
    if N < 1:
        raise ValueError("N must be positive")
    total = Fraction(13, 8)
    for n in range(N):
        total += Fraction((-1) ** (n + 1) * factorial(2 * n + 1), factorial(n) * factorial(n + 2) * 4 ** (2 * n + 3))
    return float(total)


def trig_angles(p: int, phi_digits: int | None = 5) -> tuple[float, float]:
    """(arcsin((Phi_p - 1)/2), arcsin(Phi_p / 2)) in degrees.

    By default Phi_p is first rounded to five places, which is how the
    reference table was built; pass ``phi_digits=None`` for the full value.
    """
    phi = golden_ratio(p)
    phi = float(round(phi, phi_digits)) if phi_digits is not None else float(phi)
    return (math.degrees(math.asin((phi - 1) / 2)), math.degrees(math.asin(min(phi / 2, 1.0))))


def trig_checks(p_max: int = 20) -> list[tuple[str, float, float, float]]:
    """Trigonometric forms of Phi and the two arcsin columns for p <= p_max."""
    phi = float(PHI)
    s18, s54 = math.sin(math.radians(18)), math.sin(math.radians(54))
    rows = [
        ("1 + 2 sin 18", 1 + 2 * s18, phi, abs(1 + 2 * s18 - phi)),
        ("2 sin 54", 2 * s54, phi, abs(2 * s54 - phi)),
        ("csc 18 / 2", 0.5 / s18, phi, abs(0.5 / s18 - phi)),
    ]
    for p in range(1, p_max + 1):
        lo, hi = trig_angles(p)
        phi_p = float(golden_ratio(p))
        rows.append((f"arcsin((Phi_{p} - 1)/2)", lo, phi_p, abs(1 + 2 * math.sin(math.radians(lo)) - phi_p)))
        rows.append((f"arcsin(Phi_{p}/2)", hi, phi_p, abs(2 * math.sin(math.radians(hi)) - phi_p)))
    return rows


def nested_radical(steps: int = 40) -> float:
    """x <- sqrt(1 + x) from 1."""
    x = 1.0
    for _ in range(steps):
        x = math.sqrt(1 + x)
    return x


def nested_fraction(steps: int = 60) -> float:
    """x <- 1 + 1/x from 1."""
    x = 1.0
    for _ in range(steps):
        x = 1 + 1 / x
    return x


def recursion_checks(p: int, n_max: int = 30, rel: float = 1e-10) -> bool:
    """Numerical checks of the power relations satisfied by Phi_p."""
    if p < 2:
        raise ValueError("p must be at least 2")
    x = float(golden_ratio(p))

    def close(a, b):
        return abs(a - b) <= rel * max(abs(a), abs(b), 1.0)

    head = sum(x**k for k in range(p - 1))  # Phi^0 + ... + Phi^{p-2}
    checks = [
        close(x**p, sum(x**k for k in range(p))),
        close(x ** (p + 1), 2 * x**p - 1),
        close(x, 1 + head / x ** (p - 1)),
        close(x, 1 + 1 / (x - 1 + 1 / head)),
    ]
    checks += [close(x**n, sum(x**k for k in range(n - p, n))) for n in range(p, n_max + 1)]
    return all(checks)
