"""Exact duplication distances by search over the implicit deduplication graph.

Two independent engines are provided:

* :func:`distance` answers per-string queries by memoized breadth-first
  exploration of the (approximate) parent relation, producing a replayable
  certificate of exactly that many steps.
* :func:`max_distance_table` runs a dynamic program over all canonical
  strings in increasing length order and reports, for every n, the maximum
  distance over strings of length at most n together with a witness.

Distances are invariant under alphabet relabelling, so the DP only ever
touches canonical strings (first occurrences labelled 0, 1, 2, ... in
order).

Memory model: for q = 2 a canonical string of length m is packed big-endian
into the integer range [0, 2^(m-1)) and each length owns one uint8 array, so
a full table up to n = 24 costs about 2^24 bytes; relaxation runs as
vectorised bit arithmetic over whole length-layers (the layer is the unit
the concurrency contract allows to process in parallel, and the vectorised
sweep is bit-identical to the sequential order).  Other alphabets fall back
to a hash-keyed memo over canonical strings.  Builds that would exceed the
configured budgets raise ResourceBudgetError naming the largest completed
length.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import bounds as _bounds
from .certificates import PathCertificate, Step
from .codec import ApproxDupStep, ball_rank
from .debruijn import substring_lower_bound
from .errors import DomainError, ResourceBudgetError
from .repeats import greedy_dedup_path
from .words import (
    BetaLike,
    DupStep,
    QString,
    _dedup_sites,
    as_beta,
    is_root,
    root_of,
)

DEFAULT_STATE_BUDGET = 8_000_000
DEFAULT_MEMORY_MB = 1024
_INF = 255


@dataclass(frozen=True)
class TableEntry:
    fmax: int
    witness: QString


@dataclass(frozen=True)
class DistanceTable:
    """n -> (max distance over strings of length <= n, lexicographically least witness)."""

    q: int
    beta: Fraction
    entries: dict[int, TableEntry]

    def to_text_lines(self) -> list[str]:
        return [
            f"{n}\t{e.fmax}\t{e.witness}" for n, e in sorted(self.entries.items())
        ]

    def to_obj(self) -> dict:
        return {
            "q": self.q,
            "beta": f"{self.beta.numerator}/{self.beta.denominator}",
            "entries": [
                {"n": n, "f": e.fmax, "witness": str(e.witness)}
                for n, e in sorted(self.entries.items())
            ],
        }


# ---------------------------------------------------------------------------
# Per-string BFS engine


def _is_root_bytes(s: bytes) -> bool:
    return len(set(s)) == len(s)


def distance(
    v: QString,
    beta: BetaLike = 0,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> tuple[int, PathCertificate]:
    """Exact shortest distance from ``v`` back to the first reachable root.

    Memoized BFS over the parent relation: parents are strictly shorter, so
    the search always terminates; the budget caps the number of explored
    states.  For beta = 0 the terminal root is root_of(v); for beta > 0 it is
    whichever root the shortest path reaches, recorded in the certificate.
    """
    b = as_beta(beta)
    num, den = b.numerator, b.denominator
    if state_budget <= 0:
        raise DomainError(f"state budget must be positive, got {state_budget}")
    if is_root(v):
        return 0, PathCertificate(v.q, v, (), v, b)

    start = v.symbols
    dist: dict[bytes, int] = {start: 0}
    came_from: dict[bytes, tuple[bytes, int, int, int, int]] = {}
    queue: deque[bytes] = deque([start])
    explored = 0
    found: bytes | None = None

    while queue and found is None:
        s = queue.popleft()
        explored += 1
        if explored > state_budget:
            greedy = greedy_dedup_path(v, b)
            raise ResourceBudgetError(
                f"state budget {state_budget} exhausted after {explored - 1} states",
                states_explored=explored - 1,
                best_lower_bound=_bounds.trivial_lower_bound_f(v.q, len(v)),
                best_upper_bound=len(greedy.steps),
            )
        d = dist[s]
        for j, L, i, dd in _dedup_sites(s, num, den):
            parent = s[:j] + s[j + L:]
            if parent in dist:
                continue
            dist[parent] = d + 1
            came_from[parent] = (s, j, L, i, dd)
            if _is_root_bytes(parent):
                found = parent
                break
            queue.append(parent)

    assert found is not None, "non-root strings always have a parent"
    if num == 0:
        assert found == root_of(v).symbols

    steps: list[Step] = []
    cur = found
    while cur != start:
        child, j, L, i, dd = came_from[cur]
        t = j - i - L
        if dd == 0:
            steps.append(DupStep(p=i, l=L, t=t))
        else:
            radius = (num * L) // den
            block = QString(cur[i:i + L], v.q)
            copy = QString(child[j:j + L], v.q)
            steps.append(ApproxDupStep(p=i, l=L, t=t, j=ball_rank(block, radius, copy)))
        cur = child
    cert = PathCertificate(v.q, QString(found, v.q), tuple(steps), v, b)
    return dist[found], cert


# ---------------------------------------------------------------------------
# Table DP, binary fast path


def _xor_patterns(l: int, num: int, den: int) -> list[int]:
    """Substitution patterns delta with den * popcount(delta) <= num * l (q=2)."""
    if num == 0:
        return [0]
    return [d for d in range(1 << l) if den * d.bit_count() <= num * l]


def binary_layers(
    n_max: int, beta: BetaLike = 0
) -> list[np.ndarray]:
    """Distance arrays for canonical binary strings, one uint8 array per length.

    ``layers[m][idx]`` is the distance of the canonical string whose m
    big-endian bits are ``idx`` (the leading bit is always 0, hence
    ``idx < 2^(m-1)``).  Index 0 of the returned list is unused.
    """
    b = as_beta(beta)
    num, den = b.numerator, b.denominator
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")

    layers: list[np.ndarray] = [np.zeros(0, dtype=np.uint8)]
    for m in range(1, n_max + 1):
        layers.append(np.full(1 << (m - 1), _INF, dtype=np.uint8))
    layers[1][0] = 0                     # "0"
    if n_max >= 2:
        layers[2][1] = 0                 # "01"

    patterns = {l: _xor_patterns(l, num, den) for l in range(1, n_max // 2 + 1)}

    for s in range(1, n_max):
        fs = layers[s]
        assert int(fs.max()) < _INF, "every canonical string is reachable"
        fs1 = fs + 1
        vals = np.arange(1 << (s - 1), dtype=np.int64)
        for l in range(1, n_max - s + 1):
            if l > s:
                break                    # the duplicated block must fit in the source
            mask_l = (1 << l) - 1
            target = layers[s + l]
            deltas = patterns[l]
            for e in range(l, s + 1):
                sl = s - e
                high = vals >> sl
                low = vals & ((1 << sl) - 1)
                head = high << l
                for p in range(0, e - l + 1):
                    blk = (vals >> (s - p - l)) & mask_l
                    for delta in deltas:
                        y = ((head | (blk ^ delta)) << sl) | low
                        cur = target[y]
                        np.minimum(cur, fs1, out=cur)
                        target[y] = cur
    assert all(int(layers[m].max()) < _INF for m in range(1, n_max + 1))
    return layers


def _qstring_from_index(m: int, idx: int) -> QString:
    return QString(bytes((idx >> (m - 1 - i)) & 1 for i in range(m)), 2)


# ---------------------------------------------------------------------------
# Table DP, generic alphabet


def _canonical_bytes(s: bytes) -> bytes:
    mapping: dict[int, int] = {}
    for sym in s:
        if sym not in mapping:
            mapping[sym] = len(mapping)
    return bytes(mapping[sym] for sym in s)


def _canonical_state_count(q: int, n_max: int) -> int:
    """Number of canonical strings of length <= n_max over q symbols."""
    counts = {1: 1}                      # distinct-symbol count -> how many strings
    total = 1
    for _m in range(2, n_max + 1):
        nxt: dict[int, int] = {}
        for d, c in counts.items():
            nxt[d] = nxt.get(d, 0) + c * d          # reuse one of d seen symbols
            if d < q:
                nxt[d + 1] = nxt.get(d + 1, 0) + c  # introduce the next symbol
        counts = nxt
        total += sum(counts.values())
    return total


def generic_distance_memo(
    q: int, n_max: int, beta: BetaLike = 0
) -> dict[bytes, int]:
    """Distances for every canonical string of length <= n_max (hash-keyed DP)."""
    b = as_beta(beta)
    num, den = b.numerator, b.denominator
    memo: dict[bytes, int] = {bytes([0]): 0}
    layer: list[tuple[bytes, int]] = [(bytes([0]), 1)]   # (string, #distinct)
    for m in range(2, n_max + 1):
        nxt: list[tuple[bytes, int]] = []
        for s, d in layer:
            for a in range(min(d + 1, q)):
                nxt.append((s + bytes([a]), d + (1 if a == d else 0)))
        for s, d in nxt:
            if d == m:                   # pairwise distinct symbols: a root
                memo[s] = 0
                continue
            best = _INF
            for j, L, _i, _dd in _dedup_sites(s, num, den):
                parent = s[:j] + s[j + L:]
                cand = memo[_canonical_bytes(parent)]
                if cand < best:
                    best = cand
            assert best < _INF, "non-root strings always have a parent"
            memo[s] = best + 1
        layer = nxt
    return memo


# ---------------------------------------------------------------------------
# Public table API


def _check_budgets(
    q: int, n_max: int, state_budget: int, memory_mb: int, bytes_per_state: int
) -> None:
    states = _canonical_state_count(q, n_max)
    if states > state_budget:
        raise ResourceBudgetError(
            f"table needs {states} states, budget is {state_budget}",
            largest_completed_n=0,
        )
    if states * bytes_per_state > memory_mb * (1 << 20):
        raise ResourceBudgetError(
            f"table needs ~{states * bytes_per_state >> 20} MiB, budget is {memory_mb} MiB",
            largest_completed_n=0,
        )


def max_distance_table(
    q: int,
    n_max: int,
    beta: BetaLike = 0,
    *,
    state_budget: int = DEFAULT_STATE_BUDGET,
    memory_mb: int = DEFAULT_MEMORY_MB,
) -> DistanceTable:
    """The table n -> max distance over all strings of length <= n, with witnesses.

    The DP processes canonical strings in increasing length order;
    ``f(w) = 0`` for roots and ``1 + min over parents`` otherwise.  The
    reported witness is the lexicographically least canonical string
    attaining the maximum.
    """
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    b = as_beta(beta)

    per_length: list[tuple[int, QString]] = []
    if q == 2:
        _check_budgets(q, n_max, state_budget, memory_mb, bytes_per_state=1)
        layers = binary_layers(n_max, b)
        for m in range(1, n_max + 1):
            arr = layers[m]
            fmax = int(arr.max())
            per_length.append((fmax, _qstring_from_index(m, int(arr.argmax()))))
    else:
        _check_budgets(q, n_max, state_budget, memory_mb, bytes_per_state=96)
        memo = generic_distance_memo(q, n_max, b)
        best: dict[int, tuple[int, bytes]] = {}
        for s, f in memo.items():
            m = len(s)
            if m not in best or f > best[m][0] or (f == best[m][0] and s < best[m][1]):
                best[m] = (f, s)
        for m in range(1, n_max + 1):
            f, s = best[m]
            per_length.append((f, QString(s, q)))

    entries: dict[int, TableEntry] = {}
    running = -1
    witness: QString | None = None
    for n in range(1, n_max + 1):
        fmax, wit = per_length[n - 1]
        if fmax > running:
            running, witness = fmax, wit
        elif fmax == running and witness is not None and wit.symbols < witness.symbols:
            witness = wit
        assert witness is not None
        entries[n] = TableEntry(running, witness)
    return DistanceTable(q=q, beta=b, entries=entries)


def distance_map(
    q: int,
    n_max: int,
    beta: BetaLike = 0,
    *,
    state_budget: int = DEFAULT_STATE_BUDGET,
    memory_mb: int = DEFAULT_MEMORY_MB,
) -> dict[QString, int]:
    """Distance of every canonical string of length <= n_max, as a dict.

    Look up arbitrary strings through :func:`dupdist.words.canonicalize`;
    distances are relabelling-invariant.
    """
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    b = as_beta(beta)
    out: dict[QString, int] = {}
    if q == 2:
        _check_budgets(q, n_max, state_budget, memory_mb, bytes_per_state=1)
        layers = binary_layers(n_max, b)
        for m in range(1, n_max + 1):
            arr = layers[m]
            for idx in range(len(arr)):
                out[_qstring_from_index(m, idx)] = int(arr[idx])
    else:
        _check_budgets(q, n_max, state_budget, memory_mb, bytes_per_state=96)
        for s, f in generic_distance_memo(q, n_max, b).items():
            out[QString(s, q)] = f
    return out


# ---------------------------------------------------------------------------
# Cheap per-string bounds


def distance_bounds(v: QString, beta: BetaLike = 0, k_max: int = 8) -> _bounds.BoundReport:
    """Certified lower and upper bounds on the distance of ``v`` without search.

    Lower: the doubling bound, and (exact edges only) the distinct-substring
    bound maximised over window lengths 2..k_max.  Upper: the greedy
    certificate length.
    """
    b = as_beta(beta)
    entries = [
        _bounds.BoundEntry(
            name="doubling",
            kind="lower",
            value=_bounds.trivial_lower_bound_f(v.q, len(v)),
            certified=True,
            assumptions="children at most double the length",
        )
    ]
    if b == 0:
        best_k, best_val = None, 0
        for k in range(2, min(k_max, len(v)) + 1):
            val = substring_lower_bound(v, k)
            if val > best_val:
                best_k, best_val = k, val
        entries.append(
            _bounds.BoundEntry(
                name="substring-count",
                kind="lower",
                value=best_val,
                certified=True,
                assumptions=f"distinct k-gram surplus, best k={best_k}; exact edges only",
            )
        )
    greedy = greedy_dedup_path(v, b)
    entries.append(
        _bounds.BoundEntry(
            name="greedy",
            kind="upper",
            value=len(greedy.steps),
            certified=True,
            assumptions="replayable certificate",
        )
    )
    return _bounds.BoundReport(
        q=v.q, n=len(v), beta=b, subject=str(v), entries=tuple(entries)
    )
