"""Cohort simulation of the generalised progeny problem.

A creature gives birth to ``alpha`` young per time step once it is mature,
stops after ``gamma`` births and dies at age ``delta``.  The population is
tracked as counts per (age, births given), so every number is exact.

Maturity: a creature born at step k first breeds at step k + L where the
lag L is ``beta`` by default, or ``beta + 1`` with ``strict_maturity`` (it
must be strictly older than beta).  The founder breeds at step
``first_birth_step`` (1 unless overridden).

Each step: every creature ages by one, those reaching ``delta`` die, the
fertile ones give birth, and the newborns join at age 0.  The ``total``
column counts living progeny that are still too young to breed, i.e. the
births of the last L steps.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .charpoly import RecurrenceSpec


@dataclass(frozen=True)
class BreedConfig:
    alpha: int
    beta: int
    gamma: int | None = None
    delta: int | None = None
    strict_maturity: bool = False
    first_birth_step: int = 1
    allow_degenerate: bool = False

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("alpha and beta must be positive")
        if self.gamma is not None and self.gamma < 1:
            raise ValueError("gamma must be positive when given")
        if self.delta is not None:
            if self.delta < 1:
                raise ValueError("delta must be positive when given")
            if self.delta <= self.beta and not self.allow_degenerate:
                raise ValueError("delta <= beta: nothing ever breeds (pass allow_degenerate to run anyway)")
        if not 1 <= self.first_birth_step <= self.lag:
            raise ValueError(f"first_birth_step must lie in 1..{self.lag}")

    @property
    def lag(self) -> int:
        return self.beta + 1 if self.strict_maturity else self.beta


@dataclass
class CohortState:
    counts: Counter
    step: int = 0

    @property
    def population(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class BreedRow:
    step: int
    births: int
    total: int
    cumulative: int
    population: int
    deaths: int

    @property
    def adults(self) -> int:
        return self.population - self.births


def initial_state(config: BreedConfig) -> CohortState:
    return CohortState(Counter({(config.lag - config.first_birth_step, 0): 1}))


def step_state(state: CohortState, config: BreedConfig) -> tuple[CohortState, int, int]:
    """Advance one step; returns (new state, births, deaths)."""
    nxt: Counter = Counter()
    births = deaths = 0
    for (age, given), count in state.counts.items():
        age += 1
        if config.delta is not None and age >= config.delta:
            deaths += count
            continue
        if age >= config.lag and (config.gamma is None or given < config.gamma):
            births += config.alpha * count
            given += 1
        nxt[(age, given)] += count
    if births:
        nxt[(0, 0)] += births
    return CohortState(nxt, state.step + 1), births, deaths


def simulate(config: BreedConfig, n: int) -> list[BreedRow]:
    """Rows for steps 0..n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    state = initial_state(config)
    history = [0]
    rows = [BreedRow(0, 0, 0, 0, state.population, 0)]
    cumulative = dead = 0
    for _ in range(n):
        state, births, deaths = step_state(state, config)
        history.append(births)
        cumulative += births
        dead += deaths
        young = sum(history[-config.lag:])
        rows.append(BreedRow(state.step, births, young, cumulative, state.population, dead))
    return rows


def totals(config: BreedConfig, n: int) -> list[int]:
    return [r.total for r in simulate(config, n)]


def rabbit_pairs(n: int) -> list[BreedRow]:
    """Pairs mature after one month and breed from month two; the
    population column is the classic pair count t_0 = 1, 1, 2, 3, 5, ..."""
    return simulate(BreedConfig(1, 2, first_birth_step=2), n)


def closed_form_a2b2g3(alpha: int, gamma: int, n: int) -> int:
    """With n = a gamma + b: b alpha if a == 0, else (b (alpha - 1) + gamma) alpha^a."""
    if alpha < 1 or gamma < 1 or n < 0:
        raise ValueError("need alpha, gamma >= 1 and n >= 0")
    a, b = divmod(n, gamma)
    if a == 0:
        return b * alpha
    return (b * (alpha - 1) + gamma) * alpha**a


def _solve(rows: list[list[int]], rhs: list[int]) -> list[Fraction] | None:
    """Gauss-Jordan over the rationals; None if singular."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def recurrence_extract(config: BreedConfig, window: int = 6, verify: int = 20) -> RecurrenceSpec | None:
    """Smallest-order integer recurrence t_n = sum c_k t_{n-k}, k <= window,
    fitted on the ``total`` column and checked on ``verify`` further terms."""
    if config.gamma is not None or config.delta is not None:
        raise ValueError("recurrences are only extracted without gamma and delta")
    if window < 1:
        raise ValueError("window must be positive")
    start = 2 * window + config.lag  # skip the start-up transient
    t = totals(config, start + 2 * window + verify + 1)
    for order in range(1, window + 1):
        rows = [[t[n - k] for k in range(1, order + 1)] for n in range(start, start + order)]
        coeffs = _solve(rows, [t[n] for n in range(start, start + order)])
        if coeffs is None or any(c.denominator != 1 for c in coeffs):
            continue
        c = [int(x) for x in coeffs]
        check = range(start + order, start + order + verify)
        if all(t[n] == sum(c[k - 1] * t[n - k] for k in range(1, order + 1)) for n in check):
            return RecurrenceSpec([(ck, k) for k, ck in enumerate(c, 1) if ck != 0])
    return None
