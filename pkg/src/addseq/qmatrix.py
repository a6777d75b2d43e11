"""Generating Q-matrices of p-sequences and their determinantal identities.

Matrices are tuples of tuples of Python ints.  Determinants use Bareiss
fraction-free elimination, so nothing is ever rounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .seqcore import fibonacci_lucas, make_family, terms


@dataclass(frozen=True)
class BigIntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Sequence[Sequence[int]]):
        r = tuple(tuple(int(x) for x in row) for row in rows)
        if not r or any(len(row) != len(r) for row in r):
            raise ValueError("matrix must be square and non-empty")
        object.__setattr__(self, "rows", r)

    @property
    def order(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "BigIntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __matmul__(self, other: "BigIntMatrix") -> "BigIntMatrix":
        if other.order != self.order:
            raise ValueError("order mismatch")
        cols = list(zip(*other.rows))
        return BigIntMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows])

    def apply(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.order:
            raise ValueError(f"vector has length {len(vec)}, matrix order is {self.order}")
        return [sum(a * b for a, b in zip(row, vec)) for row in self.rows]

    def to_json(self) -> dict:
        return {"order": self.order, "rows": [[str(x) for x in row] for row in self.rows]}


def q_matrix(p: int) -> BigIntMatrix:
    """Ones in the first row and on the subdiagonal."""
    if p < 2:
        raise ValueError("p must be at least 2")
    return q_tilde([1] * p)


def q_tilde(coeffs: Sequence[int]) -> BigIntMatrix:
    """Companion-style generator with first row c_1..c_p."""
    p = len(coeffs)
    if p < 2:
        raise ValueError("need at least two coefficients")
    if coeffs[-1] == 0:
        raise ValueError("last coefficient must be non-zero")
    rows = [list(coeffs)] + [[int(j == i - 1) for j in range(p)] for i in range(1, p)]
    return BigIntMatrix(rows)


def mat_pow(m: BigIntMatrix, n: int) -> BigIntMatrix:
    if n < 0:
        raise ValueError("n must be non-negative")
    result, base = BigIntMatrix.identity(m.order), m
    while n:
        if n & 1:
            result = result @ base
        base = base @ base
        n >>= 1
    return result


def advance_state(m: BigIntMatrix, state: Sequence[int], n: int) -> list[int]:
    """M^n applied to ``state``; with (t_{p-1}, ..., t_0) the result is
    (t_{n+p-1}, ..., t_n)."""
    if len(state) != m.order:
        raise ValueError(f"state has length {len(state)}, matrix order is {m.order}")
    return mat_pow(m, n).apply(state)


def det(m: BigIntMatrix) -> int:
    """Bareiss fraction-free determinant."""
    a = [list(row) for row in m.rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def cassini(n: int) -> int:
    """f_{n+1} f_{n-1} - f_n^2."""
    if n < 1:
        raise ValueError("n must be positive")
    f, _ = fibonacci_lucas(n + 2)
    return f[n + 1] * f[n - 1] - f[n] ** 2


# Entry (r, c) of Q_p^n as (family, k, index offset, factor): the entry is
# t_{n + offset - r}[family] times factor, where factor names another term.
# family "k" uses S_k(p); "exponent" is S_X(p).
STRUCTURE = {
    2: {
        "min_n": 1,
        "columns": [("k", 1, 1, None), ("k", 1, 0, None)],
    },
    3: {
        "min_n": 2,
        "columns": [("k", 2, 2, None), ("exponent", None, 0, ("k", 2, 2)), ("k", 2, 1, None)],
    },
    4: {
        "min_n": 3,
        "columns": [
            ("k", 3, 3, None),
            ("k", 2, 3, ("k", 3, 3)),
            ("exponent", None, 0, ("k", 3, 3)),
            ("k", 3, 2, None),
        ],
    },
}


def _seq(p: int, family: str, k, count: int) -> list[int]:
    return terms(make_family(family, p, k), count)


def structural_expected(p: int, n: int) -> BigIntMatrix:
    """Q_p^n rebuilt from sequence terms per the STRUCTURE table."""
    spec = STRUCTURE[p]
    cols = []
    for family, k, offset, factor in spec["columns"]:
        seq = _seq(p, family, k, n + offset + 2)
        mult = 1
        if factor is not None:
            ffam, fk, fidx = factor
            mult = _seq(p, ffam, fk, fidx + 1)[fidx]
        cols.append([seq[n + offset - r] * mult for r in range(p)])
    return BigIntMatrix([list(row) for row in zip(*cols)])


def structural_check(p: int, n: int) -> bool | None:
    """True/False when an identification exists for (p, n), else None."""
    if p not in STRUCTURE or n < STRUCTURE[p]["min_n"]:
        return None
    return mat_pow(q_matrix(p), n) == structural_expected(p, n)


def determinantal_identity(p: int, n: int) -> tuple[int, bool | None]:
    """(det Q_p^n, entry identification result or None when unsupported)."""
    if p < 2:
        raise ValueError("p must be at least 2")
    if n < 1:
        raise ValueError("n must be positive")
    return det(mat_pow(q_matrix(p), n)), structural_check(p, n)
