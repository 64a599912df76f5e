"""de Bruijn sequences and the distinct-substring lower bound.

Generation uses the classic concatenation of Lyndon words of length dividing
k in lexicographic order, which yields the lexicographically least cyclic de
Bruijn sequence of order k.  A cyclic sequence is turned into a linear string
by appending its first k-1 symbols ("linearize"); after that every one of
the q^k distinct k-grams occurs as an ordinary substring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ResourceBudgetError
from .words import QString, root_of

DEFAULT_LENGTH_BUDGET = 1 << 26


@dataclass(frozen=True)
class SubstringCount:
    """Distinct length-k substring counts for a string and its root."""

    k: int
    count: int
    root_count: int


def debruijn(q: int, k: int, length_budget: int = DEFAULT_LENGTH_BUDGET) -> QString:
    """The lexicographically least de Bruijn sequence of order ``k`` over q symbols.

    Returned as a linear string of length exactly ``q^k`` whose cyclic
    reading contains every k-gram once.
    """
    if q < 2 or k < 1:
        raise DomainError(f"need q >= 2 and k >= 1, got q={q}, k={k}")
    if q ** k > length_budget:
        raise ResourceBudgetError(
            f"de Bruijn sequence of length {q ** k} exceeds budget {length_budget}"
        )
    a = [0] * (k + 1)
    seq = bytearray()

    def extend(t: int, p: int) -> None:
        if t > k:
            if k % p == 0:
                seq.extend(a[1:p + 1])
        else:
            a[t] = a[t - p]
            extend(t + 1, p)
            for sym in range(a[t - p] + 1, q):
                a[t] = sym
                extend(t + 1, t)

    extend(1, 1)
    return QString(bytes(seq), q)


def verify_debruijn(y: QString, k: int) -> bool:
    """True iff ``|y| = q^k`` and the cyclic k-grams of ``y`` are exactly all of them."""
    if k < 1:
        return False
    q, s = y.q, y.symbols
    if len(s) != q ** k:
        return False
    doubled = s + s[:k - 1]
    grams = {doubled[i:i + k] for i in range(len(s))}
    return len(grams) == q ** k


def linearize(y: QString, k: int) -> QString:
    """Append the first k-1 symbols so every cyclic k-gram appears linearly."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return QString(y.symbols + y.symbols[:k - 1], y.q)


def count_distinct_substrings(y: QString, k: int) -> SubstringCount:
    """Exact N(y, k) together with N(root(y), k)."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    s = y.symbols
    count = len({s[i:i + k] for i in range(len(s) - k + 1)})
    r = root_of(y).symbols
    root_count = len({r[i:i + k] for i in range(len(r) - k + 1)})
    return SubstringCount(k=k, count=count, root_count=root_count)


def substring_lower_bound(y: QString, k: int) -> int:
    """ceil((N(y,k) - N(root(y),k)) / (2(k-1))), a lower bound on the exact distance.

    One deduplication can destroy at most 2(k-1) distinct k-grams (those
    straddling the two seams around the removed copy), so the distance to the
    root is at least the k-gram surplus over the root divided by 2(k-1).
    For ``k > |y|`` both counts are 0 and the bound is 0.
    """
    if k < 2:
        raise DomainError(f"k must be >= 2 (the 2(k-1) denominator vanishes), got {k}")
    sc = count_distinct_substrings(y, k)
    surplus = max(0, sc.count - sc.root_count)
    return -(-surplus // (2 * (k - 1)))


def debruijn_bound(q: int, k: int) -> int:
    """ceil((q^k - k + 1) / (2(k-1))): the distance any order-k de Bruijn string forces.

    Valid for ``k >= q + 1`` (the root then contributes no k-gram).
    """
    if k < q + 1:
        raise DomainError(
            f"the bound requires k >= q + 1 so the root holds no k-gram, got k={k}, q={q}"
        )
    return -(-(q ** k - k + 1) // (2 * (k - 1)))
