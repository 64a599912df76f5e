"""The per-length maxima of the distance to the root.

The dynamic program sweeps all canonical binary strings in length order and
records, for each n, the largest distance over strings of length at most n
and the lexicographically least witness attaining it.  The binary values up
to n = 32 are pinned as a golden regression table.
"""

import time

from dupdist import BINARY_MAX_DISTANCE, max_distance_table

t0 = time.time()
table = max_distance_table(2, 16)
print(f"binary table up to n=16 ({time.time() - t0:.2f}s):")
print("n\tf(n)\twitness")
for line in table.to_text_lines():
    print(line)

mismatches = [
    n for n in range(1, 17)
    if table.entries[n].fmax != BINARY_MAX_DISTANCE[n]
]
print(f"\nagainst the golden values: {'OK' if not mismatches else mismatches}")

print("\nthe same engine covers other alphabets (hash-keyed fallback):")
t3 = max_distance_table(3, 8)
for line in t3.to_text_lines():
    print(line)

print("\nand approximate edges; with beta = 1 the maxima grow only "
      "logarithmically:")
t1 = max_distance_table(2, 14, 1)
print([t1.entries[n].fmax for n in range(1, 15)])
t0 = max_distance_table(2, 14, 0)
print([t0.entries[n].fmax for n in range(1, 15)], "(exact, for comparison)")
