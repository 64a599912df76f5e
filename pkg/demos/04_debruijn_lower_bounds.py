"""de Bruijn strings force large distances.

One deduplication destroys at most 2(k-1) distinct k-grams, so a string with
many distinct k-grams needs many steps.  de Bruijn sequences maximise the
k-gram count and are therefore near-extremal witnesses.
"""

from dupdist import (
    QString,
    count_distinct_substrings,
    debruijn,
    debruijn_bound,
    distance,
    linearize,
    substring_lower_bound,
    verify_debruijn,
)

seq = debruijn(3, 2)
print(f"the lexicographically least ternary order-2 de Bruijn sequence: {seq}")
print(f"verification: {verify_debruijn(seq, 2)}")
other = QString.parse("001022112", 3)
print(f"another valid one: {other} -> {verify_debruijn(other, 2)}")

print()
for q, k in [(2, 3), (2, 4), (2, 5), (4, 2)]:
    s = debruijn(q, k)
    print(f"debruijn(q={q}, k={k}): length {len(s)}, valid {verify_debruijn(s, k)}")

print()
lin = linearize(debruijn(2, 3), 3)
sc = count_distinct_substrings(lin, 3)
print(f"linearized order-3 binary sequence: {lin}")
print(f"distinct 3-grams: {sc.count} (root contributes {sc.root_count})")
print(f"substring lower bound: ceil({sc.count}/4) = {substring_lower_bound(lin, 3)}")
print(f"closed-form value for any order-3 binary de Bruijn string: "
      f"{debruijn_bound(2, 3)}")

f, _ = distance(lin)
print(f"exact distance of the concrete string: f = {f}")

print()
print("growing k, the forced distance approaches n / (2 log n):")
for k in range(3, 9):
    n = 2 ** k
    print(f"  k={k}: length {n:4d} forces f >= {debruijn_bound(2, k):4d}")
