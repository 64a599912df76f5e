"""Numeric bound formulas: entropy, Elias-Bassalygo, Plotkin-type, exact code
size search, and the counting / doubling lower bounds.

Threshold comparisons against (q-1)/q are exact rational comparisons.  Values
returned as floats are computed from library logarithms (relative error well
below 1e-12 at desk scale); the counting bound additionally rounds its
Hamming-ball term up and is therefore a valid lower bound despite floating
point.  Asymptotic formulas (the rate-based upper bound below the threshold)
are surfaced with ``certified=False`` in reports: they are leading-order
values, not finite-n guarantees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .errors import DomainError, ResourceBudgetError
from .words import QString, as_beta

DEFAULT_CODE_SEARCH_LIMIT = 200_000


@dataclass(frozen=True)
class BoundEntry:
    name: str
    kind: str            # "lower" | "upper"
    value: float | int
    certified: bool      # False marks leading-order asymptotic values
    assumptions: str

    def to_obj(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "value": self.value,
            "certified": self.certified,
            "assumptions": self.assumptions,
        }


@dataclass(frozen=True)
class BoundReport:
    q: int
    n: int
    beta: Fraction
    entries: tuple[BoundEntry, ...]
    subject: str | None = None

    def to_obj(self) -> dict:
        obj = {
            "q": self.q,
            "n": self.n,
            "beta": f"{self.beta.numerator}/{self.beta.denominator}",
            "entries": [e.to_obj() for e in self.entries],
        }
        if self.subject is not None:
            obj["subject"] = self.subject
        return obj

    def to_text_lines(self) -> list[str]:
        head = f"q={self.q} n={self.n} beta={self.beta.numerator}/{self.beta.denominator}"
        if self.subject is not None:
            head += f" string={self.subject}"
        lines = [head]
        for e in self.entries:
            value = f"{e.value:.6f}" if isinstance(e.value, float) else str(e.value)
            tag = "certified" if e.certified else "asymptotic"
            lines.append(f"  {e.kind:<5} {e.name:<18} {value:>14}  [{tag}] {e.assumptions}")
        return lines


@dataclass(frozen=True)
class CodeSearchResult:
    """An exactly computed maximal code size with a witness code."""

    q: int
    k: int
    beta: Fraction
    M: int
    witness_code: tuple[QString, ...]


# ---------------------------------------------------------------------------
# Entropy and classical rate bounds


def entropy_q(q: int, x) -> float:
    """q-ary entropy -x log_q x - (1-x) log_q(1-x) + x log_q(q-1).

    Defined on [0, 1] with H_q(0) = 0 and H_q(1) = log_q(q-1).
    """
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    xf = float(x)
    if not 0.0 <= xf <= 1.0:
        raise DomainError(f"entropy argument must lie in [0, 1], got {x}")
    lnq = math.log(q)
    acc = 0.0
    if 0.0 < xf:
        acc -= xf * math.log(xf)
    if xf < 1.0:
        acc -= (1.0 - xf) * math.log(1.0 - xf)
    acc += xf * math.log(q - 1) if q > 2 else 0.0
    return acc / lnq


def elias_bassalygo(q: int, beta) -> float:
    """Rate upper bound 1 - H_q((q-1)/q * (1 - sqrt(1 - q beta / (q-1)))).

    Valid for 0 <= beta < (q-1)/q.
    """
    b = Fraction(beta)
    threshold = Fraction(q - 1, q)
    if not 0 <= b < threshold:
        raise DomainError(
            f"Elias-Bassalygo requires 0 <= beta < (q-1)/q = {threshold}, got {b}"
        )
    inner = (q - 1) / q * (1.0 - math.sqrt(1.0 - float(q * b / (q - 1))))
    return 1.0 - entropy_q(q, inner)


def plotkin_limit(q: int, beta) -> Fraction:
    """The exact rational beta*q / (beta*q - (q-1)); requires beta > (q-1)/q."""
    b = Fraction(beta)
    threshold = Fraction(q - 1, q)
    if not b > threshold:
        raise DomainError(
            f"Plotkin-type bound requires beta > (q-1)/q = {threshold}, got {b}"
        )
    return (b * q) / (b * q - (q - 1))


def plotkin_c(q: int, beta) -> tuple[int, Fraction]:
    """c = ceil(beta q / (beta q - (q-1))) and q' = (c+1)/c, exactly."""
    limit = plotkin_limit(q, beta)
    c = -((-limit.numerator) // limit.denominator)
    return c, Fraction(c + 1, c)


# ---------------------------------------------------------------------------
# Exact maximal code size (branch and bound max clique)


def _min_distance(beta: Fraction, k: int) -> int:
    """Smallest integer distance d with d >= beta * k."""
    return -((-beta.numerator * k) // beta.denominator)


class _CliqueSearch:
    """Branch-and-bound maximum clique with a greedy colouring bound."""

    def __init__(self, adj: list[int], node_budget: int):
        self.adj = adj
        self.node_budget = node_budget
        self.nodes_seen = 0
        self.best: list[int] = []
        self.best_size = 0

    def _greedy_seed(self, cand: int) -> None:
        clique: list[int] = []
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            clique.append(v)
            m &= self.adj[v]
        if len(clique) > self.best_size:
            self.best, self.best_size = clique, len(clique)

    def run(self, cand: int, floor_size: int = 0) -> None:
        """Raise ``best`` above ``floor_size`` if cand holds a bigger clique."""
        self.best_size = max(self.best_size, floor_size)
        self._greedy_seed(cand)
        self._expand(cand, [])

    def _expand(self, cand: int, clique: list[int]) -> None:
        self.nodes_seen += 1
        if self.nodes_seen > self.node_budget:
            raise ResourceBudgetError(
                f"clique search exceeded {self.node_budget} nodes",
                best_lower_bound=self.best_size,
            )
        if len(clique) + cand.bit_count() <= self.best_size:
            return
        if not cand:
            self.best, self.best_size = clique.copy(), len(clique)
            return
        # greedy colouring: a clique meets each independence class at most
        # once, so len(clique) + colour is an upper bound down this branch
        adj = self.adj
        classes: list[int] = []
        vs: list[int] = []
        colours: list[int] = []
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            av = adj[v]
            for ci, cmask in enumerate(classes):
                if not av & cmask:
                    classes[ci] = cmask | (1 << v)
                    vs.append(v)
                    colours.append(ci + 1)
                    break
            else:
                classes.append(1 << v)
                vs.append(v)
                colours.append(len(classes))
        order = sorted(range(len(vs)), key=colours.__getitem__)
        for idx in reversed(order):
            v = vs[idx]
            if len(clique) + colours[idx] <= self.best_size:
                return
            clique.append(v)
            self._expand(cand & adj[v], clique)
            clique.pop()
            cand &= ~(1 << v)


def _pack_rows(mat: np.ndarray) -> list[int]:
    return [
        int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
        for row in mat
    ]


def exact_M(
    q: int,
    k: int,
    beta,
    *,
    search_limit: int = DEFAULT_CODE_SEARCH_LIMIT,
    node_budget: int = 20_000_000,
) -> CodeSearchResult:
    """Maximal size of a q-ary length-k code with pairwise d_H >= beta * k.

    Exhaustive search.  Hamming distances are invariant under coordinate
    permutations and per-coordinate symbol relabellings, so some maximum code
    contains the all-zero word, and (when it has a second word) also the word
    0^(k-w) 1^w for some weight w >= ceil(beta k).  The search fixes both and
    runs a branch-and-bound maximum clique over their common compatible set,
    once per weight.  Only these two symmetries are exploited.  The witness
    is deterministic for fixed inputs (not necessarily the lexicographic
    minimum over all maximum codes).
    """
    if q < 2 or k < 1:
        raise DomainError(f"need q >= 2 and k >= 1, got q={q}, k={k}")
    b = as_beta(beta)
    if q ** k > search_limit:
        raise ResourceBudgetError(
            f"code search space q^k = {q ** k} exceeds limit {search_limit}"
        )
    d = _min_distance(b, k)

    if d <= 1:
        witness = tuple(
            QString(bytes(w), q) for w in product(range(q), repeat=k)
        )
        return CodeSearchResult(q=q, k=k, beta=b, M=q ** k, witness_code=witness)

    zero = bytes(k)
    if d > k:
        return CodeSearchResult(q=q, k=k, beta=b, M=1, witness_code=(QString(zero, q),))

    words = np.array(list(product(range(q), repeat=k)), dtype=np.uint8)
    weights = (words != 0).sum(axis=1)
    cand = words[weights >= d]

    best_m = 2
    best_code = [zero, zero[: k - d] + b"\x01" * d]
    for w in range(d, k + 1):
        second = np.array([0] * (k - w) + [1] * w, dtype=np.uint8)
        keep = (cand != second).sum(axis=1) >= d
        sub = cand[keep]
        if len(sub) == 0:
            continue
        dist_ok = np.zeros((len(sub), len(sub)), dtype=bool)
        for i in range(len(sub)):
            dist_ok[i] = (sub != sub[i]).sum(axis=1) >= d
            dist_ok[i, i] = False
        search = _CliqueSearch(_pack_rows(dist_ok), node_budget)
        search.run((1 << len(sub)) - 1, floor_size=best_m - 2)
        if 2 + search.best_size > best_m:
            best_m = 2 + search.best_size
            best_code = [zero, second.tobytes()] + [sub[v].tobytes() for v in search.best]
    best_code.sort()
    return CodeSearchResult(
        q=q, k=k, beta=b, M=best_m,
        witness_code=tuple(QString(wd, q) for wd in best_code),
    )


def rate(q: int, k: int, beta, **kwargs) -> float:
    """log_q M(q, k, beta) / k."""
    m = exact_M(q, k, beta, **kwargs).M
    return math.log(m, q) / k


# ---------------------------------------------------------------------------
# Finite-n evaluators for the distance bounds


def trivial_lower_bound_f(q: int, n: int) -> int:
    """max(0, ceil(log2(n / q))): children at most double the length.

    Exact integer evaluation (smallest f with q * 2^f >= n).
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    f = 0
    while q << f < n:
        f += 1
    return f


def exact_upper_bound_f(q: int, n: int, k_prime: int) -> float:
    """Closed-form upper bound 3 q^k' + n(q-1) / (q (log_q n - 3)(1 - (k'-3)/((k'-4) q))).

    Requires k' >= 14 (so n >= 3 q^k' meets the repeat-guarantee condition),
    n >= 3 q^k', and (k'-3)/((k'-4) q) < 1 so the geometric series converges.
    """
    if k_prime < 14:
        raise DomainError(f"k' must be >= 14, got {k_prime}")
    if n < 3 * q ** k_prime:
        raise DomainError(f"need n >= 3 q^k' = {3 * q ** k_prime}, got n={n}")
    ratio = Fraction(k_prime - 3, (k_prime - 4) * q)
    if not ratio < 1:
        raise DomainError(f"(k'-3)/((k'-4) q) = {ratio} must be < 1")
    logn = math.log(n, q)
    return 3 * q ** k_prime + n * (q - 1) / (q * (logn - 3) * (1 - float(ratio)))


def approx_upper_bound_f(q: int, n: int, beta) -> float:
    """Upper bound on the approximate distance maximum at length n.

    Below the threshold (q-1)/q this is the leading-order value
    ``n * r / log_q n`` with ``r`` from :func:`elias_bassalygo` (asymptotic,
    not certified at finite n); above the threshold it is the certified
    finite bound ``(c+1) + log_{q'} n``.  The threshold itself is an open
    case and raises.
    """
    b = Fraction(beta)
    threshold = Fraction(q - 1, q)
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if b == threshold:
        raise DomainError(
            f"beta = (q-1)/q = {threshold} is the open transition case; no bound available"
        )
    if b < threshold:
        r = elias_bassalygo(q, b)
        return n * r / math.log(n, q)
    c, q_prime = plotkin_c(q, b)
    return (c + 1) + math.log(n) / math.log(float(q_prime))


def _ball_term_upper(q: int, n: int, beta: Fraction) -> int:
    """Integer upper bound on q^(H_q(beta) n), rounded up for bound validity."""
    if beta == 0:
        return 1
    log2_ball = entropy_q(q, beta) * n * math.log2(q)
    return 1 << math.ceil(log2_ball * (1.0 + 1e-12) + 1e-9)


def counting_lower_bound_f(q: int, n: int, beta) -> int:
    """Least f with q! q f n^(3f) q^(H_q(beta) n) >= q^n, a lower bound on the
    distance maximum at length n.

    Exact big-integer arithmetic; the ball term is rounded up so the returned
    value is always valid.  Requires beta < (q-1)/q (the ball-volume bound
    needs it).  For n <= q roots of length n exist and the bound is 0.
    """
    b = as_beta(beta)
    threshold = Fraction(q - 1, q)
    if not b < threshold:
        raise DomainError(
            f"counting bound requires beta < (q-1)/q = {threshold}, got {b}"
        )
    if n <= q:
        return 0
    ball = _ball_term_upper(q, n, b)
    base = math.factorial(q) * q * ball
    target = q ** n
    n3 = n ** 3
    power = n3
    f = 1
    while base * f * power < target:
        f += 1
        power *= n3
        if f > 3 * n:
            raise AssertionError("counting bound failed to converge")
    return f


def path_description_count(q: int, n: int, beta, f: int) -> int:
    """q! q sum_{i=1..f} n^(2i) C(n, i) q^(H_q(beta) n), evaluated exactly.

    Over-counts the quadruple-sequence descriptions of length <= f; the
    entropy term is rounded up so the value stays a valid upper bound on the
    number of describable strings.
    """
    b = as_beta(beta)
    threshold = Fraction(q - 1, q)
    if not b < threshold:
        raise DomainError(
            f"description count requires beta < (q-1)/q = {threshold}, got {b}"
        )
    if f < 0:
        raise DomainError(f"f must be >= 0, got {f}")
    ball = _ball_term_upper(q, n, b)
    total = sum(n ** (2 * i) * math.comb(n, i) for i in range(1, f + 1))
    return math.factorial(q) * q * ball * total


# ---------------------------------------------------------------------------
# Aggregated report for a (q, n, beta) triple


def bound_report(q: int, n: int, beta: Fraction | int = 0) -> BoundReport:
    """All applicable formula bounds for the distance maximum at (q, n, beta)."""
    if q < 2 or n < 1:
        raise DomainError(f"need q >= 2 and n >= 1, got q={q}, n={n}")
    b = as_beta(beta)
    threshold = Fraction(q - 1, q)
    entries: list[BoundEntry] = [
        BoundEntry(
            name="doubling",
            kind="lower",
            value=trivial_lower_bound_f(q, n),
            certified=True,
            assumptions="children at most double the length",
        )
    ]
    if b < threshold:
        entries.append(
            BoundEntry(
                name="counting",
                kind="lower",
                value=counting_lower_bound_f(q, n, b),
                certified=True,
                assumptions="quadruple-description counting, ball term rounded up",
            )
        )
    if b == 0:
        best = None
        k = q + 1
        while q ** k <= n:
            val = -(-(q ** k - k + 1) // (2 * (k - 1)))
            if best is None or val > best[1]:
                best = (k, val)
            k += 1
        if best is not None:
            entries.append(
                BoundEntry(
                    name="debruijn",
                    kind="lower",
                    value=best[1],
                    certified=True,
                    assumptions=f"forced by the order-{best[0]} de Bruijn string",
                )
            )
        if n >= 3 * q ** 14:
            entries.append(
                BoundEntry(
                    name="closed-form",
                    kind="upper",
                    value=exact_upper_bound_f(q, n, 14),
                    certified=True,
                    assumptions="iterated longest-repeat removal, k'=14",
                )
            )
    if b < threshold and n >= 2:
        r = elias_bassalygo(q, b)
        entries.append(
            BoundEntry(
                name="rate",
                kind="upper",
                value=n * r / math.log(n, q),
                certified=False,
                assumptions=f"leading order only, r={r:.6f} from Elias-Bassalygo",
            )
        )
    elif b > threshold and n >= 2:
        c, q_prime = plotkin_c(q, b)
        entries.append(
            BoundEntry(
                name="plotkin-regime",
                kind="upper",
                value=approx_upper_bound_f(q, n, b),
                certified=True,
                assumptions=f"c={c} q'={q_prime.numerator}/{q_prime.denominator}",
            )
        )
    elif b == threshold:
        entries.append(
            BoundEntry(
                name="open-case",
                kind="upper",
                value=float("nan"),
                certified=False,
                assumptions="behaviour at beta=(q-1)/q is open; no formula applies",
            )
        )
    return BoundReport(q=q, n=n, beta=b, entries=tuple(entries))
