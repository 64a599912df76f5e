"""Repeat search and the greedy deduplication upper bound."""

import random
from fractions import Fraction

import pytest

from conftest import all_binary_strings, brute_longest_repeat
from dupdist import (
    DomainError,
    QString,
    find_approx_repeat,
    find_exact_repeat,
    greedy_dedup_path,
    is_root,
    longest_exact_repeat,
    repeat_guarantee_threshold,
    replay_certificate,
    root_of,
    verify_certificate,
)


def q2(text):
    return QString.parse(text, 2)


def q3(text):
    return QString.parse(text, 3)


def assert_hit_sound(x: QString, hit, beta=Fraction(0)):
    """The located blocks exist, are disjoint, and meet the declared budget."""
    d = hit.decomposition
    s = x.symbols
    left = s[d.left_start:d.left_start + d.b_len]
    right = s[d.right_start:d.right_start + d.b_len]
    assert d.left_start + d.b_len <= d.right_start
    assert d.right_start + d.b_len <= len(s)
    got = sum(u != v for u, v in zip(left, right))
    assert got == hit.hamming
    b = Fraction(beta)
    assert b.denominator * got <= b.numerator * d.b_len or got == 0


class TestFindExactRepeat:
    def test_spec_examples(self):
        hit = find_exact_repeat(q2("011011"), 3)
        assert hit is not None and hit.b_len == 3
        assert hit.decomposition.left_start == 0
        assert hit.decomposition.right_start == 3

        assert find_exact_repeat(q3("001022112"), 2) is None

        hit = find_exact_repeat(q2("00"), 1)
        assert hit is not None and hit.b_len == 1

    def test_k_min_validation(self):
        with pytest.raises(DomainError):
            find_exact_repeat(q2("00"), 0)

    def test_existence_matches_brute_force(self):
        for x in all_binary_strings(2, 10):
            for k in range(1, len(x) // 2 + 1):
                brute = brute_longest_repeat(x)
                expected = brute is not None and brute[0] >= k
                assert (find_exact_repeat(x, k) is not None) == expected

    def test_guarantee_threshold(self):
        # q=2, k=2: 2q^k + k^2 q^(k/2) / 2 = 12, so length 14 forces a repeat
        assert repeat_guarantee_threshold(2, 2) == 14


class TestLongestExactRepeat:
    def test_spec_examples(self):
        hit = longest_exact_repeat(q2("0101"))
        assert hit is not None and hit.b_len == 2

        hit = longest_exact_repeat(q3("001022112"))
        assert hit is not None and hit.b_len == 1

        assert longest_exact_repeat(q2("01")) is None

    def test_matches_brute_force_exhaustive(self):
        for x in all_binary_strings(1, 12):
            brute = brute_longest_repeat(x)
            hit = longest_exact_repeat(x)
            if brute is None:
                assert hit is None
            else:
                L, i, j = brute
                assert hit is not None
                assert (hit.b_len, hit.decomposition.left_start,
                        hit.decomposition.right_start) == (L, i, j)
                assert_hit_sound(x, hit)

    def test_matches_brute_force_sampled(self):
        rng = random.Random(19)
        for _ in range(2000):
            m = rng.randint(13, 16)
            x = QString(bytes(rng.randrange(2) for _ in range(m)), 2)
            brute = brute_longest_repeat(x)
            hit = longest_exact_repeat(x)
            assert brute is not None and hit is not None
            assert (hit.b_len, hit.decomposition.left_start,
                    hit.decomposition.right_start) == brute


class TestFindApproxRepeat:
    def test_strict_block_phase_fails_then_fallback(self):
        # blocks 000 and 111 sit at distance exactly beta*k, so the strict
        # block phase rejects them and the non-strict window scan reports them
        hit = find_approx_repeat(q2("000111"), 3, 1)
        assert hit is not None
        assert hit.via == "window-scan"
        assert hit.rule == "at-most"
        assert hit.hamming == 3

    def test_block_phase_strict_success(self):
        hit = find_approx_repeat(q2("001011"), 3, Fraction(2, 3))
        assert hit is not None
        assert hit.via == "block-split"
        assert hit.rule == "strict"
        assert hit.hamming == 1
        assert_hit_sound(q2("001011"), hit, Fraction(2, 3))

    def test_exact_repeat_qualifies(self):
        hit = find_approx_repeat(q2("0101"), 2, Fraction(1, 2))
        assert hit is not None
        assert hit.hamming == 0
        assert hit.via == "block-split"

    def test_block_count_guarantee(self):
        # more than M(q,k,beta) blocks force a strictly-closer pair:
        # M(2,3,2/3) = 4 (the even-weight code), so 5 blocks suffice
        rng = random.Random(5)
        for _ in range(2000):
            x = QString(bytes(rng.randrange(2) for _ in range(15 + rng.randint(0, 2))), 2)
            hit = find_approx_repeat(x, 3, Fraction(2, 3))
            assert hit is not None
            assert hit.via == "block-split" and hit.rule == "strict"


class TestGreedy:
    def test_spec_examples(self):
        cert = greedy_dedup_path(q2("0101"))
        assert len(cert.steps) == 1
        assert cert.root == q2("01")

        cert = greedy_dedup_path(q2("000"))
        assert len(cert.steps) == 2
        assert cert.root == q2("0")

        cert = greedy_dedup_path(q3("012"), 1)
        assert len(cert.steps) == 0

    def test_certificates_replay_exhaustive(self):
        for x in all_binary_strings(1, 10):
            cert = greedy_dedup_path(x)
            assert replay_certificate(cert) == x
            assert cert.root == root_of(x)

    def test_beta_certificates_replay(self):
        rng = random.Random(23)
        for _ in range(300):
            q = rng.choice([2, 3])
            m = rng.randint(1, 14)
            x = QString(bytes(rng.randrange(q) for _ in range(m)), q)
            beta = rng.choice([Fraction(1, 2), Fraction(2, 3), Fraction(1)])
            cert = greedy_dedup_path(x, beta)
            assert verify_certificate(cert)
            assert is_root(cert.root)

    def test_beta_one_halves_quickly(self):
        # with beta=1 any disjoint pair qualifies, so each round removes
        # floor(m/2) symbols and the certificate stays logarithmic
        x = QString(bytes([0, 1] * 32), 2)
        cert = greedy_dedup_path(x, 1)
        assert len(cert.steps) <= 7
        assert verify_certificate(cert)
