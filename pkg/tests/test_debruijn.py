"""de Bruijn generation, verification, and the substring-count bound."""

import itertools
import random

import pytest

from dupdist import (
    DomainError,
    QString,
    ResourceBudgetError,
    count_distinct_substrings,
    debruijn,
    debruijn_bound,
    deduplicate,
    duplicate,
    DupStep,
    Decomposition,
    linearize,
    substring_lower_bound,
    verify_debruijn,
)


def q2(text):
    return QString.parse(text, 2)


def q3(text):
    return QString.parse(text, 3)


class TestGeneration:
    def test_small_sequences(self):
        assert str(debruijn(2, 1)) == "01"
        assert str(debruijn(2, 3)) == "00010111"
        assert str(debruijn(2, 4)) == "0000100110101111"
        assert str(debruijn(3, 2)) == "001021122"

    def test_all_pass_verification(self):
        for q, k in [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 8),
                     (3, 1), (3, 2), (3, 3), (4, 2), (5, 2)]:
            seq = debruijn(q, k)
            assert len(seq) == q ** k
            assert verify_debruijn(seq, k)

    def test_budget(self):
        with pytest.raises(ResourceBudgetError):
            debruijn(2, 30, length_budget=1000)


class TestVerification:
    def test_reference_ternary_sequence(self):
        assert verify_debruijn(q3("001022112"), 2)

    def test_binary_order2(self):
        assert verify_debruijn(q2("0011"), 2)
        assert not verify_debruijn(q2("0101"), 2)

    def test_wrong_length(self):
        assert not verify_debruijn(q2("001"), 2)


class TestCounting:
    def test_examples(self):
        assert count_distinct_substrings(q2("0101"), 3).count == 2
        lin = linearize(debruijn(2, 3), 3)
        assert count_distinct_substrings(lin, 3).count == 8
        assert count_distinct_substrings(q2("000"), 1).count == 1

    def test_vs_brute_enumeration(self):
        rng = random.Random(41)
        for _ in range(300):
            q = rng.choice([2, 3])
            m = rng.randint(1, 14)
            y = QString(bytes(rng.randrange(q) for _ in range(m)), q)
            for k in range(1, m + 1):
                grams = {y.symbols[i:i + k] for i in range(m - k + 1)}
                assert count_distinct_substrings(y, k).count == len(grams)

    def test_root_count_zero_beyond_alphabet(self):
        for y in [q2("00110101"), q3("0120120")]:
            for k in range(y.q + 1, len(y)):
                assert count_distinct_substrings(y, k).root_count == 0

    def test_linearize_contract(self):
        for q, k in [(2, 3), (2, 5), (3, 2), (4, 2)]:
            lin = linearize(debruijn(q, k), k)
            assert len(lin) == q ** k + k - 1
            assert count_distinct_substrings(lin, k).count == q ** k


class TestSubstringLowerBound:
    def test_examples(self):
        lin = linearize(debruijn(2, 3), 3)
        assert substring_lower_bound(lin, 3) == 2
        assert substring_lower_bound(q2("0101"), 3) == 1
        assert substring_lower_bound(q2("01"), 3) == 0

    def test_k_below_two_rejected(self):
        with pytest.raises(DomainError):
            substring_lower_bound(q2("0101"), 1)

    def test_dedup_destroys_few_substrings(self):
        # one deduplication loses at most 2(k-1) distinct k-grams
        rng = random.Random(43)
        for _ in range(2000):
            q = rng.choice([2, 3])
            m = rng.randint(1, 12)
            x = QString(bytes(rng.randrange(q) for _ in range(m)), q)
            l = rng.randint(1, m)
            p = rng.randrange(m - l + 1)
            t = rng.randrange(m - l - p + 1)
            y = duplicate(x, DupStep(p, l, t))
            assert deduplicate(y, Decomposition(p, l, t)) == x
            for k in (3, 4):
                ny = count_distinct_substrings(y, k).count
                nx = count_distinct_substrings(x, k).count
                assert nx >= ny - 2 * (k - 1)


class TestDebruijnBound:
    def test_formula_values(self):
        # ceil((q^k - k + 1) / (2(k-1)))
        assert debruijn_bound(2, 3) == 2    # ceil(6/4)
        assert debruijn_bound(2, 4) == 3    # ceil(13/6)
        assert debruijn_bound(2, 5) == 4    # ceil(28/8)

    def test_hypothesis_k_at_least_q_plus_one(self):
        with pytest.raises(DomainError):
            debruijn_bound(2, 2)
        with pytest.raises(DomainError):
            debruijn_bound(3, 3)

    def test_consistency_with_substring_bound(self):
        # the generic substring bound on the concrete linearized string is at
        # least as strong as the closed-form value
        for q, k in [(2, 3), (2, 4), (2, 5)]:
            lin = linearize(debruijn(q, k), k)
            assert substring_lower_bound(lin, k) >= debruijn_bound(q, k)
