"""The sharp transition of the approximate distance at beta = (q-1)/q.

When the inserted copy may differ from its block in a beta fraction of
positions, the distance maxima stay near n/log n below the threshold
(q-1)/q but collapse to O(log n) above it.  At desk scale the collapse is
already visible.
"""

import math
from fractions import Fraction

from dupdist import QString, distance, distance_map, max_distance_table

print("binary maxima by length for three budgets:")
print("n    f_0  f_1/2  f_1")
t0 = max_distance_table(2, 14, 0)
th = max_distance_table(2, 14, Fraction(1, 2))
t1 = max_distance_table(2, 14, 1)
for n in range(1, 15):
    print(f"{n:<4} {t0.entries[n].fmax:<4} {th.entries[n].fmax:<6} {t1.entries[n].fmax}")

print()
print("above the threshold the certified bound is (c+1) + log_{q'} n with")
print("c = 2, q' = 3/2 for q = 2, beta = 1:")
for n in (4, 8, 14):
    bound = 3 + math.log(n) / math.log(1.5)
    print(f"  n={n:2d}: f_1(n) = {t1.entries[n].fmax} <= {bound:.1f}")

print()
print("per-string: the same string under different budgets")
v = QString.parse("00110101100101", 2)
for beta in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1)):
    f, cert = distance(v, beta)
    print(f"  beta={beta}: f = {f}, reached root {cert.root}")

print()
print("monotonicity: enlarging the budget never increases a distance")
m0 = distance_map(2, 10, 0)
m1 = distance_map(2, 10, 1)
worst = max(m0[v] - m1[v] for v in m0)
print(f"  largest drop from f_0 to f_1 over all strings of length <= 10: {worst}")
