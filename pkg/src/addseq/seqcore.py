"""Exact generation of additive p-sequences.

A p-sequence starts from ``p`` seed values and every later term is the sum
of the ``p`` terms before it.  All arithmetic is on Python ints, so terms
never lose precision.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Sequence

FAMILIES = ("general", "k", "coefficient", "exponent", "syllable", "one")

# brute-force composition enumeration is capped here; use the syllable
# sequence beyond it
COMPOSITION_LIMIT = 25


@dataclass(frozen=True)
class SequenceSpec:
    """One additive sequence: order ``p``, seeds and the family it came from.

    For the ``one`` family (an arithmetic progression) ``seeds`` holds the
    single start value and ``increment`` the constant step.
    """

    p: int
    seeds: tuple[int, ...]
    family: str = "general"
    k: int | None = None
    increment: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.p < 1:
            raise ValueError("order p must be at least 1")
        if len(self.seeds) != self.p:
            raise ValueError(f"expected {self.p} seeds, got {len(self.seeds)}")
        if self.family == "one" and (self.p != 1 or self.increment < 0):
            raise ValueError("a 1-sequence has one seed and a non-negative increment")

    @property
    def label(self) -> str:
        if self.family == "k":
            return f"S_{self.k}({self.p})"
        if self.family == "one":
            return f"S(1; s0={self.seeds[0]}, a={self.increment})"
        tag = {"general": "G", "coefficient": "C", "exponent": "X", "syllable": "S"}
        return f"S_{tag[self.family]}({self.p})"


def make_family(family: str, p: int, k: int | None = None) -> SequenceSpec:
    """Canonical seeds for a named family.

    >>> make_family("syllable", 4).seeds
    (1, 2, 4, 8)
    """
    if p < 1:
        raise ValueError("order p must be at least 1")
    if family == "k":
        if k is None or not 0 <= k < p:
            raise ValueError(f"k must satisfy 0 <= k <= {p - 1}")
        return SequenceSpec(p, tuple(int(i == k) for i in range(p)), "k", k)
    if family == "coefficient":
        seeds = (1,) * p
    elif family == "exponent":
        seeds = tuple(range(p))
    elif family == "syllable":
        seeds = tuple(2**i for i in range(p))
    else:
        raise ValueError(f"family {family!r} has no canonical seeds")
    return SequenceSpec(p, seeds, family)


def general(seeds: Sequence[int]) -> SequenceSpec:
    return SequenceSpec(len(seeds), tuple(int(s) for s in seeds), "general")


def one_sequence(s0: int, a: int) -> SequenceSpec:
    return SequenceSpec(1, (s0,), "one", increment=a)


def iter_terms(spec: SequenceSpec) -> Iterator[int]:
    """Yield t_0, t_1, ... without end."""
    if spec.family == "one":
        yield from itertools.count(spec.seeds[0], spec.increment)
        return
    window = list(spec.seeds)
    yield from window
    total = sum(window)
    while True:
        # sliding sum: add the new term, drop the oldest
        yield total
        oldest = window.pop(0)
        window.append(total)
        total = 2 * total - oldest


def terms(spec: SequenceSpec, count: int) -> list[int]:
    """The first ``count`` terms."""
    return _cached_terms(spec, count) if count <= 4096 else list(itertools.islice(iter_terms(spec), count))


@lru_cache(maxsize=256)
def _cached_terms_tuple(spec: SequenceSpec, count: int) -> tuple[int, ...]:
    return tuple(itertools.islice(iter_terms(spec), count))


def _cached_terms(spec: SequenceSpec, count: int) -> list[int]:
    return list(_cached_terms_tuple(spec, count))


def term(spec: SequenceSpec, n: int) -> int:
    if n < 0:
        raise ValueError("negative indices are not supported")
    if spec.family == "one":
        return one_seq_term(spec.seeds[0], spec.increment, n)
    if n < spec.p:
        return spec.seeds[n]
    return next(itertools.islice(iter_terms(spec), n, None))


def one_seq_term(s0: int, a: int, n: int) -> int:
    return s0 + n * a


def k_decomposition_check(seeds: Sequence[int], p: int, n: int) -> bool:
    """t_n of the general sequence equals the seed-weighted sum of the
    Kronecker sequences, and the coefficient sequence is their plain sum."""
    if len(seeds) != p:
        raise ValueError("need exactly p seeds")
    basis = [term(make_family("k", p, k), n) for k in range(p)]
    weighted = sum(b * s for b, s in zip(basis, seeds))
    return term(general(seeds), n) == weighted and term(make_family("coefficient", p), n) == sum(basis)


def find_shift(a: Sequence[int], b: Sequence[int], max_shift: int = 8, window: int = 30) -> int | None:
    """Smallest shift s >= 0 with a[n + s] == b[n] (or -s with a[n] == b[n + s])
    over ``window`` terms; None if no shift up to ``max_shift`` works."""
    for s in range(max_shift + 1):
        if len(a) >= s + window and len(b) >= window and list(a[s:s + window]) == list(b[:window]):
            return s
        if s and len(b) >= s + window and list(b[s:s + window]) == list(a[:window]):
            return -s
    return None


# -- compositions -------------------------------------------------------------

def compositions(n: int, p: int) -> Iterator[tuple[int, ...]]:
    """Every ordered way of writing n as a sum of parts from 1..p."""
    if n == 0:
        yield ()
        return
    for first in range(1, min(p, n) + 1):
        for rest in compositions(n - first, p):
            yield (first,) + rest


def composition_classes(n: int, p: int) -> list[tuple[tuple[int, ...], int]]:
    """Part-count vectors (n_1, ..., n_p) with sum k*n_k = n, each with its
    multiplicity (n_1 + ... + n_p)! / (n_1! ... n_p!)."""
    out = []

    def rec(k: int, remaining: int, counts: list[int]):
        if k == 0:
            if remaining == 0:
                c = tuple(reversed(counts))
                out.append((c, factorial(sum(c)) // prod(factorial(x) for x in c)))
            return
        for m in range(remaining // k + 1):
            rec(k - 1, remaining - m * k, counts + [m])

    rec(p, n, [])
    out.sort(key=lambda item: item[0], reverse=True)
    return out


def compositions_count(n: int, p: int, brute: bool = False) -> int:
    """Number of ordered compositions of n into parts 1..p.

    ``brute=True`` walks every composition; otherwise the multiplicities of
    the part-count classes are summed.
    """
    if n < 1 or p < 1:
        raise ValueError("n and p must be positive")
    if n > COMPOSITION_LIMIT:
        raise ValueError(f"enumeration is limited to n <= {COMPOSITION_LIMIT}")
    if brute:
        return sum(1 for _ in compositions(n, p))
    return sum(m for _, m in composition_classes(n, p))


# -- classic generalisations --------------------------------------------------

def stakhov_terms(p: int, count: int) -> list[int]:
    """Fibonacci p-numbers: f_k = 1 for k <= p, f_n = f_{n-1} + f_{n-p-1}."""
    if p < 0:
        raise ValueError("p must be non-negative")
    f = [1] * min(count, p + 1)
    while len(f) < count:
        n = len(f)
        f.append(f[n - 1] + f[n - p - 1])
    return f


def stakhov_term(p: int, n: int) -> int:
    return stakhov_terms(p, n + 1)[n]


def stakhov_binomial(p: int, n: int) -> int:
    """sum_k C(n - k p, k).  Matches ``stakhov_term(p, n)`` at the same index n."""
    total, k = 0, 0
    while n - k * p >= k:
        total += comb(n - k * p, k)
        k += 1
    return total


def krcadinac_terms(p: int, variant: str, count: int) -> list[int]:
    """Terms of the lower (x^{p+1} - x - 1) or upper (x (x-1)^p - 1)
    recurrences, started from p + 1 ones."""
    if variant not in ("lower", "upper"):
        raise ValueError("variant must be 'lower' or 'upper'")
    if variant == "lower" and p < 1:
        raise ValueError("the lower recurrence needs p >= 1")
    if p < 0:
        raise ValueError("p must be non-negative")
    f = [1] * min(count, p + 1)
    while len(f) < count:
        n = len(f)
        if variant == "lower":
            f.append(f[n - p] + f[n - p - 1])
        else:
            s = sum(comb(p, k) * (-1) ** (k + 1) * f[n - k] for k in range(1, p + 1))
            f.append(s + f[n - p - 1])
    return f


def fibonacci_lucas(count: int) -> tuple[list[int], list[int]]:
    f, l = [0, 1], [2, 1]
    while len(f) < count:
        f.append(f[-1] + f[-2])
        l.append(l[-1] + l[-2])
    return f[:count], l[:count]


def fib_lucas(n: int) -> tuple[int, int]:
    """(f_n, l_n) with f_0 = 0, f_1 = 1, l_0 = 2, l_1 = 1."""
    f, l = fibonacci_lucas(n + 1)
    return f[n], l[n]
