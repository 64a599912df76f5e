"""Alphabet-aware strings and the duplication / deduplication edge semantics.

Strings live over the alphabet {0, ..., q-1} with 2 <= q <= 36 and are stored
as ``bytes`` (an immutable sequence of small non-negative ints with C-speed
slicing and hashing).  The textual form writes symbols as 0-9 then a-z.

A duplication of length ``l`` at position ``p`` with transposition ``t``
rewrites ``x = (a b c d)`` with ``|a| = p``, ``|b| = l``, ``|c| = t`` into
``(a b c b d)``: the block ``b`` is copied and the copy inserted ``t``
symbols to its right.  Deduplication is the inverse and always removes the
RIGHT copy.  The approximate variant allows the inserted copy ``b^`` to
differ from ``b`` in at most ``beta * |b|`` positions.  ``beta`` is an exact
rational and every threshold test is done in integer arithmetic
(``den * d_H <= num * |b|``), so the critical threshold ``(q-1)/q`` is never
blurred by floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DomainError, InvalidDecompositionError, StepBoundsError

SYMBOL_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_Q = len(SYMBOL_CHARS)
_CHAR_VALUE = {ch: i for i, ch in enumerate(SYMBOL_CHARS)}

BetaLike = Fraction | int


@dataclass(frozen=True)
class QString:
    """A non-empty string over the alphabet {0, ..., q-1}.

    ``symbols`` may be passed as any iterable of ints and is normalised to
    ``bytes``.  Values are immutable and hashable.
    """

    symbols: bytes
    q: int

    def __post_init__(self):
        if not isinstance(self.symbols, bytes):
            object.__setattr__(self, "symbols", bytes(self.symbols))
        if not 2 <= self.q <= MAX_Q:
            raise DomainError(f"alphabet size must be in [2, {MAX_Q}], got {self.q}")
        if len(self.symbols) == 0:
            raise DomainError("strings must be non-empty")
        if max(self.symbols) >= self.q:
            raise DomainError(
                f"symbol {max(self.symbols)} out of range for alphabet size {self.q}"
            )

    @classmethod
    def parse(cls, text: str, q: int) -> "QString":
        """Parse the 0-9a-z textual form."""
        try:
            return cls(bytes(_CHAR_VALUE[ch] for ch in text.strip().lower()), q)
        except KeyError as e:
            raise DomainError(f"invalid symbol character {e.args[0]!r}") from None

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i: int) -> int:
        return self.symbols[i]

    def __str__(self) -> str:
        return "".join(SYMBOL_CHARS[s] for s in self.symbols)

    def __repr__(self) -> str:
        return f"QString({str(self)!r}, q={self.q})"


@dataclass(frozen=True)
class DupStep:
    """One exact duplication event: position ``p``, length ``l``, transposition ``t``.

    Applied to a string of length ``m`` the step requires
    ``0 <= p <= m - l`` and ``0 <= t <= m - l - p``.
    """

    p: int
    l: int
    t: int

    def __post_init__(self):
        if self.l < 1:
            raise StepBoundsError(f"duplication length must be >= 1, got {self.l}")
        if self.p < 0 or self.t < 0:
            raise StepBoundsError(f"p and t must be non-negative, got p={self.p}, t={self.t}")

    def validate_for(self, m: int) -> None:
        """Raise unless the step is applicable to a string of length ``m``."""
        if self.p > m - self.l:
            raise StepBoundsError(
                f"position out of range: need 0 <= p <= m - l, got p={self.p}, m={m}, l={self.l}"
            )
        if self.t > m - self.l - self.p:
            raise StepBoundsError(
                f"transposition out of range: need 0 <= t <= m - l - p, "
                f"got t={self.t}, m={m}, l={self.l}, p={self.p}"
            )


@dataclass(frozen=True)
class Decomposition:
    """A factorisation ``y = (a b c b^ d)`` located by block lengths.

    The left block ``b`` starts at ``a_len``; the right copy ``b^`` starts at
    ``a_len + b_len + c_len`` and has the same length.  For an exact
    decomposition the two blocks are equal symbol by symbol; an approximate
    one only promises a Hamming budget (carried by whoever produced it).
    """

    a_len: int
    b_len: int
    c_len: int
    exact: bool = True

    def __post_init__(self):
        if self.b_len < 1:
            raise InvalidDecompositionError(f"b block must be non-empty, got {self.b_len}")
        if self.a_len < 0 or self.c_len < 0:
            raise InvalidDecompositionError("a and c lengths must be non-negative")

    @property
    def left_start(self) -> int:
        return self.a_len

    @property
    def right_start(self) -> int:
        return self.a_len + self.b_len + self.c_len

    def validate_for(self, m: int) -> None:
        if self.right_start + self.b_len > m:
            raise InvalidDecompositionError(
                f"decomposition exceeds string length {m}: "
                f"a={self.a_len}, b={self.b_len}, c={self.c_len}"
            )


def hamming(a: bytes | QString, b: bytes | QString) -> int:
    """Hamming distance between two equal-length symbol sequences."""
    sa = a.symbols if isinstance(a, QString) else a
    sb = b.symbols if isinstance(b, QString) else b
    if len(sa) != len(sb):
        raise DomainError(f"length mismatch: {len(sa)} vs {len(sb)}")
    return sum(x != y for x, y in zip(sa, sb))


def as_beta(beta: BetaLike) -> Fraction:
    """Validate and normalise a relative Hamming budget to a Fraction in [0, 1]."""
    b = Fraction(beta)
    if not 0 <= b <= 1:
        raise DomainError(f"beta must lie in [0, 1], got {beta}")
    return b


def parse_beta(text: str) -> Fraction:
    """Parse a rational literal like ``"1/2"``, ``"0"`` or ``"1"``.

    Floating-point literals are rejected on purpose: the threshold
    ``(q-1)/q`` must be compared exactly.
    """
    s = text.strip()
    if "." in s or "e" in s.lower():
        raise DomainError(f"beta must be a rational literal 'num/den', got {text!r}")
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            frac = Fraction(int(num), int(den))
        else:
            frac = Fraction(int(s))
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"cannot parse beta {text!r}: {e}") from None
    return as_beta(frac)


def format_beta(beta: BetaLike) -> str:
    b = Fraction(beta)
    return f"{b.numerator}/{b.denominator}"


# ---------------------------------------------------------------------------
# Edge semantics


def duplicate(x: QString, step: DupStep) -> QString:
    """Apply one duplication: ``(a b c d) -> (a b c b d)``."""
    step.validate_for(len(x))
    s = x.symbols
    e = step.p + step.l + step.t
    return QString(s[:e] + s[step.p:step.p + step.l] + s[e:], x.q)


def deduplicate(y: QString, d: Decomposition) -> QString:
    """Remove the right copy of an exact decomposition: ``(a b c b d) -> (a b c d)``."""
    d.validate_for(len(y))
    s = y.symbols
    left = s[d.left_start:d.left_start + d.b_len]
    right = s[d.right_start:d.right_start + d.b_len]
    if left != right:
        raise InvalidDecompositionError(
            f"blocks differ: left={left.hex()} right={right.hex()}"
        )
    return QString(s[:d.right_start] + s[d.right_start + d.b_len:], y.q)


def remove_right_block(y: QString, d: Decomposition) -> QString:
    """Remove the right block without requiring equality (approximate edges)."""
    d.validate_for(len(y))
    s = y.symbols
    return QString(s[:d.right_start] + s[d.right_start + d.b_len:], y.q)


def _dedup_sites(
    s: bytes, num: int, den: int
) -> Iterator[tuple[int, int, int, int]]:
    """Yield one witness (j, L, i, dist) per removable right block.

    ``j`` is the right-block offset, ``L`` the block length and ``i`` the
    smallest left-block offset with ``den * d_H <= num * L`` (so ``i`` is a
    deterministic witness; the resulting parent depends on ``(j, L)`` only).
    Exact matching (num == 0) runs through a hash of seen blocks instead of
    pairwise Hamming scans.
    """
    m = len(s)
    for L in range(1, m // 2 + 1):
        if num == 0:
            first_at: dict[bytes, int] = {}
            for j in range(L, m - L + 1):
                first_at.setdefault(s[j - L:j], j - L)
                i = first_at.get(s[j:j + L])
                if i is not None:
                    yield j, L, i, 0
        else:
            budget_num = num * L
            for j in range(L, m - L + 1):
                right = s[j:j + L]
                for i in range(0, j - L + 1):
                    d = sum(x != y for x, y in zip(s[i:i + L], right))
                    if den * d <= budget_num:
                        yield j, L, i, d
                        break


def parents(y: QString) -> set[QString]:
    """All distinct strings obtainable from ``y`` by one exact deduplication.

    Empty exactly when ``y`` is a root.
    """
    s, q = y.symbols, y.q
    return {
        QString(s[:j] + s[j + L:], q) for j, L, _i, _d in _dedup_sites(s, 0, 1)
    }


def approx_parents(y: QString, beta: BetaLike) -> set[QString]:
    """All strings ``(a b c d)`` with ``y = (a b c b^ d)`` and ``d_H(b, b^) <= beta * |b|``.

    Uses the non-strict comparison that defines the approximate edge set, so
    the result is a superset of :func:`parents` for every ``beta``.
    """
    b = as_beta(beta)
    s, q = y.symbols, y.q
    return {
        QString(s[:j] + s[j + L:], q)
        for j, L, _i, _d in _dedup_sites(s, b.numerator, b.denominator)
    }


# ---------------------------------------------------------------------------
# Roots and structure


def root_of(x: QString) -> QString:
    """The subsequence of first occurrences of each symbol, left to right."""
    seen = set()
    out = bytearray()
    for sym in x.symbols:
        if sym not in seen:
            seen.add(sym)
            out.append(sym)
    return QString(bytes(out), x.q)


def is_root(x: QString) -> bool:
    """True iff all symbols of ``x`` are pairwise distinct."""
    return len(set(x.symbols)) == len(x.symbols)


def period_exponent(v: QString) -> tuple[int, Fraction]:
    """Minimal period ``p`` (smallest p with v[i] == v[i+p]) and exponent |v|/p.

    Computed from the KMP failure function: the minimal period is
    ``n - (length of the longest proper border)``.
    """
    s = v.symbols
    n = len(s)
    fail = [0] * (n + 1)
    k = 0
    for i in range(1, n):
        while k and s[i] != s[k]:
            k = fail[k]
        if s[i] == s[k]:
            k += 1
        fail[i + 1] = k
    p = n - fail[n]
    return p, Fraction(n, p)


def relabel(x: QString, perm: tuple[int, ...]) -> QString:
    """Apply an alphabet permutation (``perm[old] = new``)."""
    if sorted(perm) != list(range(x.q)):
        raise DomainError(f"not a permutation of 0..{x.q - 1}: {perm}")
    return QString(bytes(perm[sym] for sym in x.symbols), x.q)


def canonicalize(x: QString) -> tuple[QString, tuple[int, ...]]:
    """Relabel symbols so first occurrences read 0, 1, 2, ... in order.

    Returns the canonical string and the applied permutation
    (``perm[old] = new``); symbols that do not occur keep their relative
    order among the unused labels.  Idempotent on canonical strings.
    """
    mapping: dict[int, int] = {}
    for sym in x.symbols:
        if sym not in mapping:
            mapping[sym] = len(mapping)
    nxt = len(mapping)
    perm = [0] * x.q
    for sym in range(x.q):
        if sym in mapping:
            perm[sym] = mapping[sym]
        else:
            perm[sym] = nxt
            nxt += 1
    return QString(bytes(mapping[sym] for sym in x.symbols), x.q), tuple(perm)


# ---------------------------------------------------------------------------
# Text format: one string per line, optional "q=<int>" header line.


def read_strings(text: str, q: int | None = None) -> list[QString]:
    """Parse the line-oriented string format.

    A leading ``q=<int>`` line fixes the alphabet size and wins over the
    ``q`` argument; without either, the smallest alphabet covering the
    symbols (at least 2) is inferred.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if lines and lines[0].lower().startswith("q="):
        q = int(lines[0][2:])
        lines = lines[1:]
    raw = []
    for ln in lines:
        try:
            raw.append(bytes(_CHAR_VALUE[ch] for ch in ln.lower()))
        except KeyError as e:
            raise DomainError(f"invalid symbol character {e.args[0]!r} in {ln!r}") from None
    if q is None:
        q = max((max(r) for r in raw if r), default=1) + 1
        q = max(q, 2)
    return [QString(r, q) for r in raw]


def write_strings(strings: Iterable[QString], include_header: bool = True) -> str:
    items = list(strings)
    out = []
    if include_header and items:
        out.append(f"q={items[0].q}")
    out.extend(str(x) for x in items)
    return "\n".join(out) + "\n"
