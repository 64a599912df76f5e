"""Paths as quadruple sequences via Hamming-ball ranking.

Every path from a root can be written as quadruples (p, l, t, j): position,
block length, transposition, and the index of the inserted copy inside the
Hamming ball around the block.  Ranking is combinatorial (no enumeration),
and the encoding is lossless.
"""

from fractions import Fraction

from dupdist import (
    QString,
    ball_rank,
    ball_size,
    ball_unrank,
    decode_path,
    distance,
    encode_path,
    format_quadruples,
)

q2 = lambda t: QString.parse(t, 2)

center = q2("00")
print(f"the radius-1 ball around {center} holds {ball_size(2, 1, 2)} words:")
for j in range(ball_size(2, 1, 2)):
    print(f"  j={j}: {ball_unrank(center, 1, j)}")

print()
print("rank is the exact inverse:")
w = q2("10")
print(f"  rank({w}) = {ball_rank(center, 1, w)}")

print()
print("ball sizes include the (q-1)^s substitution choices, so ternary balls")
print(f"are bigger: size(l=2, r=1, q=2) = {ball_size(2, 1, 2)}, "
      f"size(l=2, r=1, q=3) = {ball_size(2, 1, 3)}")

print()
v = q2("0011")
f, cert = distance(v, 1)
quads = encode_path(cert, 1)
print(f"certificate for f_1({v}) = {f} as quadruples: {format_quadruples(quads)}")
back = decode_path(2, cert.root, quads, Fraction(1))
print(f"decoding from root {cert.root} reproduces: {back}")
assert back == v

print()
print("the compact text form round-trips through the CLI decoder as well:")
print(f"  dupdist codec decode -q 2 --root {cert.root} --beta 1/1 "
      f"--quads \"{format_quadruples(quads)}\"")
