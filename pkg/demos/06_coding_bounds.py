"""Code-size machinery behind the distance bounds.

Long strings must contain close block pairs because large codes with high
minimum distance do not exist.  The module computes exact maximal code sizes
at desk scale and the classical rate bounds used beyond it.
"""

from fractions import Fraction

from dupdist import (
    bound_report,
    counting_lower_bound_f,
    elias_bassalygo,
    entropy_q,
    exact_M,
    plotkin_c,
    plotkin_limit,
    rate,
)

print("q-ary entropy peaks at (q-1)/q:")
for q in (2, 3, 4):
    print(f"  H_{q}(({q-1})/{q}) = {entropy_q(q, Fraction(q - 1, q)):.12f}")

print()
print("Elias-Bassalygo rate bound (binary):")
for num in (0, 1, 2, 3):
    beta = Fraction(num, 8)
    print(f"  beta={beta}: R <= {elias_bassalygo(2, beta):.4f}")

print()
print("exact maximal code sizes by exhaustive branch-and-bound:")
for q, k, beta in [(2, 5, Fraction(3, 5)), (2, 3, Fraction(1)),
                   (3, 4, Fraction(3, 4)), (2, 3, Fraction(1, 3))]:
    res = exact_M(q, k, beta)
    print(f"  M(q={q}, k={k}, beta={beta}) = {res.M}, "
          f"rate {rate(q, k, beta):.3f}")
res = exact_M(3, 4, Fraction(3, 4))
print(f"  witness for M(3,4,3/4) = 9: {[str(w) for w in res.witness_code]}")

print()
print("above the threshold the Plotkin-type bound caps code sizes by a constant:")
for q, beta in [(2, Fraction(3, 4)), (2, Fraction(1)), (4, Fraction(9, 10))]:
    c, qp = plotkin_c(q, beta)
    print(f"  q={q}, beta={beta}: M < {plotkin_limit(q, beta)}, "
          f"c={c}, q'={qp}")

print()
print("the counting argument lower-bounds the distance maxima:")
for n in (64, 256, 1024):
    print(f"  n={n}: f(n) >= {counting_lower_bound_f(2, n, 0)}")

print()
print("everything assembled for one (q, n, beta):")
for line in bound_report(2, 1024, Fraction(3, 4)).to_text_lines():
    print(line)
