"""Walk through p-sequences and their golden ratios.

Run with ``python demos/golden_ratios.py``.
"""
from addseq import charpoly, seqcore

# Each term of an exponent sequence is the sum of the p terms before it.
for p in (2, 3, 4):
    spec = seqcore.make_family("exponent", p)
    print(f"S_X({p}):", seqcore.terms(spec, 12))

# The ratio of successive terms settles on the dominant root of x^p - x^(p-1) - ... - 1.
print()
print(" p  Phi_p    ratio of terms")
for p in range(2, 9):
    phi = charpoly.golden_ratio(p)
    ratio = charpoly.limiting_ratio(seqcore.make_family("exponent", p))
    print(f"{p:2d}  {charpoly.round5(phi)}  {ratio:.10f}")

# The limit does not care about the seeds.
seeds = (7, 3, 11)
print()
print("seeds", seeds, "->", charpoly.limiting_ratio(seqcore.general(seeds)))

# Phi_p creeps towards 2 and reaches 2.00000 at five places from p = 18.
print()
for p in (16, 17, 18, 21):
    print(f"Phi_{p} = {charpoly.round5(charpoly.golden_ratio(p))}")

# Every other root sits strictly inside the unit circle.
rs = charpoly.all_roots(charpoly.golden_polynomial(6))
print()
print("roots of the p = 6 polynomial:")
for z in rs.roots:
    print(f"  {z.real:+.6f} {z.imag:+.6f}i  |z| = {abs(z):.6f}")
