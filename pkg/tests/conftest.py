"""Shared fixtures and brute-force oracles.

The oracles here are deliberately naive (full enumeration over all
decompositions, O(n^2) period scans, ...) and independent of the search
strategies used by the package; tests compare the two.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from dupdist import QString, distance_map, max_distance_table


def all_binary_strings(min_len: int, max_len: int):
    for m in range(min_len, max_len + 1):
        for bits in itertools.product((0, 1), repeat=m):
            yield QString(bytes(bits), 2)


def all_qary_strings(q: int, min_len: int, max_len: int):
    for m in range(min_len, max_len + 1):
        for syms in itertools.product(range(q), repeat=m):
            yield QString(bytes(syms), q)


def brute_parents(y: QString) -> set[QString]:
    """Every exact-deduplication parent by full (i, L, j) enumeration."""
    s, m = y.symbols, len(y)
    out = set()
    for L in range(1, m // 2 + 1):
        for i in range(0, m - 2 * L + 1):
            for j in range(i + L, m - L + 1):
                if s[i:i + L] == s[j:j + L]:
                    out.add(QString(s[:j] + s[j + L:], y.q))
    return out


def brute_approx_parents(y: QString, beta) -> set[QString]:
    b = Fraction(beta)
    s, m = y.symbols, len(y)
    out = set()
    for L in range(1, m // 2 + 1):
        for i in range(0, m - 2 * L + 1):
            for j in range(i + L, m - L + 1):
                d = sum(u != v for u, v in zip(s[i:i + L], s[j:j + L]))
                if b.denominator * d <= b.numerator * L:
                    out.add(QString(s[:j] + s[j + L:], y.q))
    return out


def brute_longest_repeat(x: QString) -> tuple[int, int, int] | None:
    """(L, i, j) of the longest disjoint equal pair, smallest (i, j) on ties."""
    s, m = x.symbols, len(x)
    for L in range(m // 2, 0, -1):
        for i in range(0, m - 2 * L + 1):
            for j in range(i + L, m - L + 1):
                if s[i:i + L] == s[j:j + L]:
                    return L, i, j
    return None


def brute_period(v: QString) -> int:
    """Smallest p with v[i] == v[i+p] for all valid i, by direct scan."""
    s, n = v.symbols, len(v)
    for p in range(1, n + 1):
        if all(s[i] == s[i + p] for i in range(n - p)):
            return p
    raise AssertionError("n is always a period")


@pytest.fixture(scope="session")
def dmap12():
    """Exact distances for all canonical binary strings of length <= 12."""
    return distance_map(2, 12)


@pytest.fixture(scope="session")
def table16():
    return max_distance_table(2, 16)


def canonical_binary(v: QString) -> QString:
    """Canonical form for q = 2: flip all bits when the string starts with 1."""
    s = v.symbols
    if s[0] == 0:
        return v
    return QString(bytes(1 - b for b in s), 2)
