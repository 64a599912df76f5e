"""Strings, duplication edges, deduplication, and roots.

A duplication copies a block and inserts the copy to the right:
(a b c d) becomes (a b c b d).  Starting from a string whose symbols are
pairwise distinct (a "root"), repeated duplications build arbitrarily long
strings; deduplication walks back down.
"""

from dupdist import (
    Decomposition,
    DupStep,
    QString,
    approx_parents,
    deduplicate,
    duplicate,
    is_root,
    parents,
    period_exponent,
    root_of,
)

x = QString.parse("0120", 3)
print(f"start with x = {x} over a ternary alphabet")

step = DupStep(p=1, l=2, t=1)
y = duplicate(x, step)
print(f"duplicate block [1:3] with transposition 1: {x} -> {y}")

back = deduplicate(y, Decomposition(a_len=1, b_len=2, c_len=1))
print(f"removing the right copy returns {back}")
assert back == x

print()
print(f"every string has a unique root, the subsequence of first occurrences:")
for text in ("001022112", "0101", "2"):
    v = QString.parse(text, 3)
    print(f"  root({v}) = {root_of(v)}  (is_root: {is_root(v)})")

print()
v = QString.parse("0101", 2)
print(f"parents of {v} (all one-step deduplications): "
      f"{sorted(str(p) for p in parents(v))}")
print(f"a root has no parents: parents(01) = {parents(QString.parse('01', 2))}")

print()
v = QString.parse("0011", 2)
print(f"approximate parents let the removed copy differ from the block:")
for beta in ("0", "1/2", "1"):
    from dupdist import parse_beta
    ps = approx_parents(v, parse_beta(beta))
    print(f"  beta={beta}: {sorted(str(p) for p in ps)}")

print()
print("periods and exponents (used to handle self-overlapping repeats):")
for text in ("0101", "000", "012", "01010"):
    v = QString.parse(text, 3)
    p, e = period_exponent(v)
    print(f"  {v}: period {p}, exponent {e}")
