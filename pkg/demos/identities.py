"""Exact identities: Q-matrices, Cassini, Binet and sums.

Run with ``python demos/identities.py``.
"""
from addseq import goldprops, qmatrix, sums

# Powers of the Q-matrix carry the sequence along its diagonal bands.
q3 = qmatrix.q_matrix(3)
print("Q_3^6 =")
for row in qmatrix.mat_pow(q3, 6).rows:
    print("  ", row)
print("det Q_3 =", qmatrix.det(q3), " det Q_3^6 =", qmatrix.det(qmatrix.mat_pow(q3, 6)))

# Cassini holds for as far as we care to look.
print()
print("Cassini for n = 1..8:", [qmatrix.cassini(n) for n in range(1, 9)])

# Binet's formula evaluated exactly in Q(sqrt 5).
print()
print("phi^10 =", goldprops.phi_power_surd(10))
print("f_100 via Binet =", goldprops.binet(100))

# Sums of the first n terms have closed forms in the terms themselves.
print()
for p in (2, 3, 4):
    row = sums.sum_first_n(p, 10)
    print(f"p = {p}: first 10 terms sum to {row.naive}, closed form gives {row.closed}")

# The fourth-order squares formula picks up a residual that grows from n = 4.
print()
print("p = 4 squares residuals:", [sums.sum_squares(4, n).residual for n in range(1, 11)])
