"""Reproduce the reference tables shipped in ``addseq/data``.

Each reproducer returns rows of (key, expected, computed, ok).  Values are
kept as strings so integers and rounded decimals compare exactly.
"""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from typing import Callable

from . import breedsim, charpoly, goldprops, qmatrix, seqcore, sums

Row = tuple[str, str, str, bool]


@lru_cache(maxsize=None)
def load(table_id: str):
    text = resources.files("addseq").joinpath("data", f"{table_id}.json").read_text()
    return json.loads(text)


def _row(key, expected, computed) -> Row:
    e, c = str(expected), str(computed)
    return (str(key), e, c, e == c)


def _dec(x, digits: int = 5) -> str:
    return str(charpoly.round5(x, digits))


# -- sequence tables -------------------------------------------------------------

def column_spec(label: str) -> seqcore.SequenceSpec:
    """'S_2(3)' -> S_2(3), 'S_X(4)' -> exponent family, 'S_G(2)' -> seeds (2, 21)."""
    tag, p = label[2:].split("(")
    p = int(p.rstrip(")"))
    if tag.isdigit():
        return seqcore.make_family("k", p, int(tag))
    if tag == "G":
        return seqcore.general((2, 21))
    return seqcore.make_family({"C": "coefficient", "X": "exponent", "S": "syllable"}[tag], p)


def _sequence_table(table_id: str) -> list[Row]:
    data = load(table_id)
    out = []
    for label in data["columns"]:
        expected = data["rows"][label]
        got = seqcore.terms(column_spec(label), len(expected))
        out += [_row(f"{label} n={n}", e, g) for n, (e, g) in enumerate(zip(expected, got))]
    return out


def sequence_table_mismatches(table_id: str) -> list[tuple[str, int, int, int]]:
    """(column, n, printed, computed) for every cell that disagrees."""
    data = load(table_id)
    bad = []
    for label in data["columns"]:
        expected = data["rows"][label]
        got = seqcore.terms(column_spec(label), len(expected))
        bad += [(label, n, e, g) for n, (e, g) in enumerate(zip(expected, got)) if e != g]
    return bad


# -- individual tables -----------------------------------------------------------

def _plimits() -> list[Row]:
    out = []
    for p, printed in load("plimits").items():
        phi = charpoly.golden_ratio(int(p))
        out.append(_row(f"p={p}", _dec(printed), _dec(phi)))
    return out


def _wilson() -> list[Row]:
    return [_row(f"meru {m}", _dec(v), _dec(charpoly.classic_ratio("wilson", int(m)).dominant))
            for m, v in load("wilson").items()]


def _stakhov() -> list[Row]:
    out = []
    for p, row in load("stakhov").items():
        got = seqcore.stakhov_terms(int(p), len(row))
        out += [_row(f"p={p} n={n}", e, g) for n, (e, g) in enumerate(zip(row, got))]
        out += [_row(f"p={p} n={n} binomial", e, seqcore.stakhov_binomial(int(p), n)) for n, e in enumerate(row)]
    return out


def _fibonacci() -> list[Row]:
    data = load("fibonacci")
    rows = breedsim.rabbit_pairs(len(data["total"]) - 1)
    out = []
    for r in rows:
        n = r.step
        out.append(_row(f"n={n} total", data["total"][n], r.population))
        out.append(_row(f"n={n} adult", data["adult"][n], r.adults))
        out.append(_row(f"n={n} baby", data["baby"][n], r.births))
    return out


def _syllable() -> list[Row]:
    data = load("2syllable")
    out = []
    for n, (total, classes) in enumerate(zip(data["total"], data["classes"]), 1):
        out.append(_row(f"n={n} total", total, seqcore.compositions_count(n, 2, brute=True)))
        got = {c: m for c, m in seqcore.composition_classes(n, 2)}
        for n1, n2, mult in classes:
            out.append(_row(f"n={n} s1^{n1} s2^{n2}", mult, got.get((n1, n2))))
    return out


def _breed(table_id: str, config: breedsim.BreedConfig) -> Callable[[], list[Row]]:
    def run() -> list[Row]:
        data = load(table_id)
        rows = breedsim.simulate(config, len(data["total"]) - 1)
        out = [_row(f"n={r.step} total", e, r.total) for r, e in zip(rows, data["total"])]
        if "baby" in data:
            out += [_row(f"n={r.step} baby", e, r.births) for r, e in zip(rows, data["baby"])]
        return out
    return run


BREED_CONFIGS = {
    "a1b2gna": breedsim.BreedConfig(1, 2),
    "a1b3gna": breedsim.BreedConfig(1, 3, strict_maturity=True),
    "a2b2g3": breedsim.BreedConfig(2, 2, 3),
    "a2b3g2": breedsim.BreedConfig(2, 3, 2, strict_maturity=True),
}


def _sumsq(p: int) -> Callable[[], list[Row]]:
    def run() -> list[Row]:
        data = load(f"sum{p}xsq")
        n_max = len(data["sum"])
        t = seqcore.terms(seqcore.make_family("exponent", p), n_max + 2)
        if p > 2:
            kth = seqcore.terms(seqcore.make_family("k", p, p - 1), n_max + 3)
        out = []
        for n, (total, rhs) in enumerate(zip(data["sum"], data["rhs"]), 1):
            rep = sums.sum_squares(p, n)
            out.append(_row(f"n={n} sum", total, rep.naive))
            out.append(_row(f"n={n} t_n, t_(n+1)", rhs[:2], [t[n], t[n + 1]]))
            if p == 3:
                out.append(_row(f"n={n} square", rhs[2], kth[n + 1]))
            elif p == 4:
                out.append(_row(f"n={n} square", rhs[2:4], [kth[n + 2], kth[n - 1]]))
                out.append(_row(f"n={n} delta", rhs[4], rep.residual))
            else:
                out.append(_row(f"n={n} exact", 0, rep.residual))
        return out
    return run


def _phi_trig() -> list[Row]:
    out = []
    for p, (phi, lo, hi) in load("phi").items():
        got_lo, got_hi = goldprops.trig_angles(int(p))
        out.append(_row(f"p={p} Phi", _dec(phi), _dec(charpoly.golden_ratio(int(p)))))
        out.append(_row(f"p={p} asin((Phi-1)/2)", "ok", "ok" if abs(got_lo - lo) < 1e-3 else f"{got_lo:.4f}"))
        out.append(_row(f"p={p} asin(Phi/2)", "ok", "ok" if abs(got_hi - hi) < 1e-3 else f"{got_hi:.4f}"))
    return out


def _goldenang() -> list[Row]:
    return [_row(f"p={p}", "ok", "ok" if abs(goldprops.golden_angle(int(p)) - v) < 0.05
                 else f"{goldprops.golden_angle(int(p)):.3f}") for p, v in load("goldenang").items()]


def _cassini() -> list[Row]:
    out = []
    f, _ = seqcore.fibonacci_lucas(12)
    for n, (a, b, c, result) in load("2cassini").items():
        n = int(n)
        out.append(_row(f"n={n} terms", f"{a},{b},{c}", f"{f[n + 1]},{f[n - 1]},{f[n]}"))
        out.append(_row(f"n={n} value", result, qmatrix.cassini(n)))
    return out


REPRODUCERS: dict[str, Callable[[], list[Row]]] = {
    "fibonacci": _fibonacci,
    "2syllable": _syllable,
    "stakhov": _stakhov,
    "wilson": _wilson,
    "p2": lambda: _sequence_table("p2"),
    "p3": lambda: _sequence_table("p3"),
    "p4": lambda: _sequence_table("p4"),
    "p5": lambda: _sequence_table("p5"),
    "plimits": _plimits,
    **{k: _breed(k, cfg) for k, cfg in BREED_CONFIGS.items()},
    "sum2xsq": _sumsq(2),
    "sum3xsq": _sumsq(3),
    "sum4xsq": _sumsq(4),
    "phi": _phi_trig,
    "goldenang": _goldenang,
    "2cassini": _cassini,
}


def reproduce(table_id: str) -> list[Row]:
    if table_id not in REPRODUCERS:
        raise ValueError(f"unknown table {table_id!r}; known: {', '.join(REPRODUCERS)}")
    return REPRODUCERS[table_id]()
