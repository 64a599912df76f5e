"""Exact distances with machine-checkable certificates.

The distance of a string is the least number of duplications needed to reach
it from its root.  Every answer comes with a certificate (root + step list)
whose replay reproduces the string; tampering is detected.
"""

from dupdist import (
    QString,
    certificate_dumps,
    check_certificate,
    distance,
    distance_bounds,
    greedy_dedup_path,
    verify_certificate,
)

for text in ("0101", "000", "0010011"):
    v = QString.parse(text, 2)
    f, cert = distance(v)
    print(f"f({v}) = {f}; certificate verifies: {verify_certificate(cert)}")
    print(certificate_dumps(cert))
    print()

v = QString.parse("00110100011", 2)
f, cert = distance(v)
print(f"a longer example: f({v}) = {f}")

greedy = greedy_dedup_path(v)
print(f"the greedy certificate uses {len(greedy.steps)} steps (upper bound, "
      f"optimum is {f})")

report = distance_bounds(v)
print("cheap bounds without search:")
for line in report.to_text_lines():
    print(line)

print()
print("a tampered certificate fails with a diagnostic:")
bad = cert.__class__(cert.q, cert.root, cert.steps, QString.parse("0" * len(v), 2), cert.beta)
print(f"  {check_certificate(bad)}")
