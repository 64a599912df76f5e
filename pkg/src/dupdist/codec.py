"""Hamming-ball ranking and unranking for quadruple path descriptions.

A path step can be written as a quadruple ``(p, l, t, j)`` where ``j`` indexes
the inserted copy inside the Hamming ball around the duplicated block.  The
ordering inside a ball is plain lexicographic order on the candidate words
themselves (base-q string order), and the ball of radius ``r`` around a
length-``l`` center holds

    sum_{s=0..r} C(l, s) * (q - 1)^s

words.  Note the ``(q - 1)^s`` factor: a radius-``s`` change can pick any of
the ``q - 1`` other symbols per touched position, so for q > 2 the ball is
strictly larger than the binomial sum alone.  Ranking and unranking are
combinatorial (digit by digit) and never enumerate the ball.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import DomainError, StepBoundsError
from .words import QString


@dataclass(frozen=True)
class ApproxDupStep:
    """One approximate duplication event: ``(p, l, t)`` plus ball index ``j``.

    The positional bounds are those of an exact step; ``j`` must satisfy
    ``0 <= j < ball_size(l, floor(beta * l), q)`` for the beta the step is
    interpreted under.
    """

    p: int
    l: int
    t: int
    j: int

    def __post_init__(self):
        if self.l < 1:
            raise StepBoundsError(f"duplication length must be >= 1, got {self.l}")
        if self.p < 0 or self.t < 0 or self.j < 0:
            raise StepBoundsError(
                f"p, t, j must be non-negative, got p={self.p}, t={self.t}, j={self.j}"
            )

    def validate_for(self, m: int) -> None:
        if self.p > m - self.l:
            raise StepBoundsError(
                f"position out of range: need 0 <= p <= m - l, got p={self.p}, m={m}, l={self.l}"
            )
        if self.t > m - self.l - self.p:
            raise StepBoundsError(
                f"transposition out of range: need 0 <= t <= m - l - p, "
                f"got t={self.t}, m={m}, l={self.l}, p={self.p}"
            )


def ball_size(l: int, r: int, q: int) -> int:
    """Number of length-``l`` q-ary words within Hamming distance ``r`` of a center."""
    if l < 0 or r < 0:
        raise DomainError(f"lengths and radii must be non-negative, got l={l}, r={r}")
    r = min(r, l)
    return sum(comb(l, s) * (q - 1) ** s for s in range(r + 1))


@lru_cache(maxsize=256)
def _suffix_counts(l: int, q: int) -> tuple[tuple[int, ...], ...]:
    """table[m][r] = ball_size(m, r, q) for suffix length m and radius r <= l."""
    table = []
    for m in range(l + 1):
        row = [0] * (l + 1)
        acc = 0
        for r in range(l + 1):
            if r <= m:
                acc += comb(m, r) * (q - 1) ** r
            row[r] = acc
        table.append(tuple(row))
    return tuple(table)


def _unrank(center: bytes, q: int, r: int, j: int) -> bytes:
    l = len(center)
    table = _suffix_counts(l, q)
    out = bytearray()
    rem = r
    for i in range(l):
        m = l - 1 - i
        ci = center[i]
        chosen = None
        for a in range(q):
            cost_radius = rem if a == ci else rem - 1
            cnt = 0 if cost_radius < 0 else table[m][min(cost_radius, m)]
            if j < cnt:
                chosen = a
                rem = cost_radius
                break
            j -= cnt
        if chosen is None:
            raise DomainError("rank exhausted the ball; j out of range")
        out.append(chosen)
    return bytes(out)


def _rank(center: bytes, q: int, r: int, word: bytes) -> int:
    l = len(center)
    table = _suffix_counts(l, q)
    rank = 0
    rem = r
    for i in range(l):
        m = l - 1 - i
        ci = center[i]
        wi = word[i]
        for a in range(wi):
            cost_radius = rem if a == ci else rem - 1
            if cost_radius >= 0:
                rank += table[m][min(cost_radius, m)]
        if wi != ci:
            rem -= 1
    return rank


def ball_unrank(center: QString, r: int, j: int) -> QString:
    """The ``j``-th word (0-based, lexicographic) within distance ``r`` of ``center``."""
    if r < 0:
        raise DomainError(f"radius must be non-negative, got {r}")
    if not 0 <= j < ball_size(len(center), r, center.q):
        raise DomainError(
            f"ball index {j} out of range [0, {ball_size(len(center), r, center.q)})"
        )
    return QString(_unrank(center.symbols, center.q, min(r, len(center)), j), center.q)


def ball_rank(center: QString, r: int, word: QString) -> int:
    """Lexicographic rank of ``word`` inside the radius-``r`` ball around ``center``.

    Inverse of :func:`ball_unrank`.
    """
    if len(word) != len(center):
        raise DomainError(f"length mismatch: {len(word)} vs {len(center)}")
    if word.q != center.q:
        raise DomainError(f"alphabet mismatch: {word.q} vs {center.q}")
    if r < 0:
        raise DomainError(f"radius must be non-negative, got {r}")
    dist = sum(x != y for x, y in zip(center.symbols, word.symbols))
    if dist > r:
        raise DomainError(f"word at distance {dist} lies outside the radius-{r} ball")
    return _rank(center.symbols, center.q, min(r, len(center)), word.symbols)
