"""Duplicated-substring search and the greedy deduplication it drives.

Two matching rules coexist and every hit records which one admitted it:

* ``"strict"``   - Hamming distance strictly below ``beta * l`` (the rule the
  block-splitting existence argument produces);
* ``"at-most"``  - distance at most ``beta * l`` (the rule that defines the
  approximate edge set, and the one the greedy path uses).

Exact hits are tagged ``"exact"``.  The ``via`` field distinguishes the
block-splitting phase (``"block-split"``) from the general disjoint-window
scan (``"window-scan"``).
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .certificates import PathCertificate, Step
from .codec import ApproxDupStep, ball_rank
from .errors import DomainError
from .words import (
    BetaLike,
    Decomposition,
    DupStep,
    QString,
    as_beta,
    is_root,
)


@dataclass(frozen=True)
class RepeatHit:
    """A located pair of disjoint blocks ``(b, b^)`` inside one string."""

    decomposition: Decomposition
    hamming: int
    rule: str       # "exact" | "strict" | "at-most"
    via: str        # "window-scan" | "block-split"

    @property
    def b_len(self) -> int:
        return self.decomposition.b_len


def _hit(i: int, j: int, length: int, dist: int, rule: str, via: str) -> RepeatHit:
    dec = Decomposition(a_len=i, b_len=length, c_len=j - i - length, exact=dist == 0)
    return RepeatHit(dec, dist, rule, via)


def _exact_pair_at(s: bytes, length: int) -> tuple[int, int] | None:
    """Lexicographically least (i, j) with equal disjoint length-``length`` blocks."""
    m = len(s)
    if length < 1 or 2 * length > m:
        return None
    positions: dict[bytes, list[int]] = {}
    for i in range(m - length + 1):
        positions.setdefault(s[i:i + length], []).append(i)
    best: tuple[int, int] | None = None
    for i in range(m - 2 * length + 1):
        occ = positions[s[i:i + length]]
        k = bisect_left(occ, i + length)
        if k < len(occ):
            best = (i, occ[k])
            break
    return best


def _exact_pair_exists(s: bytes, length: int) -> bool:
    m = len(s)
    if length < 1 or 2 * length > m:
        return False
    seen: set[bytes] = set()
    for j in range(length, m - length + 1):
        seen.add(s[j - length:j])
        if s[j:j + length] in seen:
            return True
    return False


def find_exact_repeat(x: QString, k_min: int) -> RepeatHit | None:
    """A decomposition with ``b_len >= k_min`` if one exists.

    A pair of length L implies a pair of length L-1 (take block prefixes), so
    existence at exactly ``k_min`` settles the question.  Whenever
    ``|x| - k_min + 1 > 2 q^k_min + k_min^2 q^(k_min/2) / 2`` a hit is
    guaranteed to exist and therefore to be returned.
    """
    if k_min < 1:
        raise DomainError(f"k_min must be >= 1, got {k_min}")
    pair = _exact_pair_at(x.symbols, k_min)
    if pair is None:
        return None
    i, j = pair
    return _hit(i, j, k_min, 0, "exact", "window-scan")


def longest_exact_repeat(x: QString) -> RepeatHit | None:
    """The maximal-length removable exact block; ties resolved to the
    leftmost left block, then the leftmost right block.

    Binary search on the block length (existence is downward monotone), with
    hash-indexed window matching per probe.
    """
    s = x.symbols
    lo, hi = 1, len(s) // 2
    if hi < 1 or not _exact_pair_exists(s, 1):
        return None
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _exact_pair_exists(s, mid):
            lo = mid
        else:
            hi = mid - 1
    i, j = _exact_pair_at(s, lo)  # type: ignore[misc]
    return _hit(i, j, lo, 0, "exact", "window-scan")


def repeat_guarantee_threshold(q: int, k: int) -> int:
    """Smallest n such that every length-n string has a repeat of length >= k.

    Exact integer evaluation of ``n - k + 1 > 2 q^k + k^2 q^(k/2) / 2``; the
    square root is handled by squaring both sides.
    """
    if q < 2 or k < 1:
        raise DomainError("need q >= 2 and k >= 1")
    qk = q ** k

    def satisfied(n: int) -> bool:
        lhs = 2 * (n - k + 1) - 4 * qk   # 2*(n-k+1 - 2 q^k)
        if lhs <= 0:
            return False
        return lhs * lhs > k ** 4 * qk   # lhs > k^2 sqrt(q^k)

    n = 2 * qk + k
    while not satisfied(n):
        n += 1
    return n


def find_approx_repeat(x: QString, k: int, beta: BetaLike) -> RepeatHit | None:
    """Repeat of length exactly ``k`` with Hamming budget ``beta * k``.

    Phase 1 cuts ``x`` into consecutive length-``k`` blocks and returns the
    first pair (i < j, lexicographic) at distance strictly below
    ``beta * k``.  This phase alone is guaranteed to succeed whenever the
    number of blocks exceeds the maximal code size M(q, k, beta).  Phase 2
    falls back to a scan over all disjoint length-``k`` windows under the
    non-strict budget; its hits carry ``via="window-scan"``.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    b = as_beta(beta)
    num, den = b.numerator, b.denominator
    s = x.symbols
    nblocks = len(s) // k
    blocks = [s[i * k:(i + 1) * k] for i in range(nblocks)]
    for bi in range(nblocks):
        for bj in range(bi + 1, nblocks):
            d = sum(u != v for u, v in zip(blocks[bi], blocks[bj]))
            if den * d < num * k:
                return _hit(bi * k, bj * k, k, d, "strict", "block-split")
    # fallback: arbitrary disjoint windows, non-strict budget
    for i in range(len(s) - 2 * k + 1):
        left = s[i:i + k]
        for j in range(i + k, len(s) - k + 1):
            d = sum(u != v for u, v in zip(left, s[j:j + k]))
            if den * d <= num * k:
                return _hit(i, j, k, d, "at-most", "window-scan")
    return None


def _widest_pair(s: bytes, num: int, den: int) -> tuple[int, int, int, int] | None:
    """Longest disjoint window pair under ``den*d <= num*L``; returns (i, j, L, d).

    Among maximal-length pairs the smallest Hamming distance wins, then the
    leftmost left block, then the leftmost right block.  Approximate matching
    is not downward monotone in L, so lengths are scanned from the top.
    """
    m = len(s)
    for L in range(m // 2, 0, -1):
        budget = num * L
        best: tuple[int, int, int] | None = None   # (d, i, j)
        for i in range(m - 2 * L + 1):
            left = s[i:i + L]
            for j in range(i + L, m - L + 1):
                d = sum(u != v for u, v in zip(left, s[j:j + L]))
                if den * d <= budget and (best is None or (d, i, j) < best):
                    best = (d, i, j)
                    if d == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is not None:
            d, i, j = best
            return i, j, L, d
    return None


def greedy_dedup_path(x: QString, beta: BetaLike = 0) -> PathCertificate:
    """Repeatedly remove the widest removable block until a root remains.

    With ``beta = 0`` each round removes the longest exact repeat; under a
    positive budget the widest window pair satisfying the non-strict rational
    test is removed, preferring exact copies among equal-length candidates.
    The returned certificate replays to ``x`` and its length is an upper
    bound on the true distance.
    """
    b = as_beta(beta)
    num, den = b.numerator, b.denominator
    steps_back: list[Step] = []
    cur = x
    while not is_root(cur):
        s = cur.symbols
        if num == 0:
            hit = longest_exact_repeat(cur)
            assert hit is not None  # non-roots always admit a length-1 repeat
            dec = hit.decomposition
            i, j, L, d = dec.left_start, dec.right_start, dec.b_len, 0
        else:
            found = _widest_pair(s, num, den)
            assert found is not None
            i, j, L, d = found
        if d == 0:
            steps_back.append(DupStep(p=i, l=L, t=j - i - L))
        else:
            radius = (num * L) // den
            block = QString(s[i:i + L], cur.q)
            copy = QString(s[j:j + L], cur.q)
            steps_back.append(
                ApproxDupStep(p=i, l=L, t=j - i - L, j=ball_rank(block, radius, copy))
            )
        cur = QString(s[:j] + s[j + L:], cur.q)
    return PathCertificate(
        q=x.q, root=cur, steps=tuple(reversed(steps_back)), target=x, beta=b
    )
