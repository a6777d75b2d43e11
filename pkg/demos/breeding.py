"""Cohort breeding models and the recurrences they hide.

Run with ``python demos/breeding.py``.
"""
from addseq import breedsim, charpoly
from addseq.breedsim import BreedConfig

# Classic rabbit pairs: the population column is the Fibonacci sequence.
rows = breedsim.rabbit_pairs(10)
print("rabbit pairs:", [r.population for r in rows])

# A creature that matures after three steps and has one child per step.
cfg = BreedConfig(alpha=1, beta=3, strict_maturity=True)
print()
print("alpha 1, beta 3, strict:", breedsim.totals(cfg, 14))
rec = breedsim.recurrence_extract(cfg)
print("recovered recurrence:", rec)
print("growth rate:", charpoly.round5(charpoly.dominant_root(charpoly.char_poly(rec))))

# Mortality: with delta = 6 every creature dies six steps after birth.
mortal = BreedConfig(alpha=1, beta=2, delta=6)
print()
print(" step  births  deaths  population")
for r in breedsim.simulate(mortal, 12):
    print(f"{r.step:5d} {r.births:7d} {r.deaths:7d} {r.population:11d}")
