"""Core string values, edges, roots, periods."""

import random
from fractions import Fraction

import pytest

from conftest import (
    all_binary_strings,
    all_qary_strings,
    brute_approx_parents,
    brute_parents,
    brute_period,
)
from dupdist import (
    Decomposition,
    DomainError,
    DupStep,
    InvalidDecompositionError,
    QString,
    StepBoundsError,
    approx_parents,
    canonicalize,
    deduplicate,
    duplicate,
    hamming,
    is_root,
    parents,
    parse_beta,
    period_exponent,
    read_strings,
    relabel,
    root_of,
    write_strings,
)


def q2(text):
    return QString.parse(text, 2)


def q3(text):
    return QString.parse(text, 3)


class TestQString:
    def test_parse_and_str_roundtrip(self):
        x = QString.parse("0120", 3)
        assert str(x) == "0120"
        assert list(x) == [0, 1, 2, 0]
        assert len(x) == 4

    def test_symbols_out_of_range(self):
        with pytest.raises(DomainError):
            QString.parse("012", 2)

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            QString(b"", 2)

    def test_alphabet_size_limits(self):
        with pytest.raises(DomainError):
            QString(b"\x00", 1)
        with pytest.raises(DomainError):
            QString(b"\x00", 37)

    def test_large_alphabet_text(self):
        x = QString.parse("0az", 36)
        assert list(x) == [0, 10, 35]
        assert str(x) == "0az"


class TestDuplicate:
    def test_spec_example_q3(self):
        assert duplicate(q3("0120"), DupStep(1, 2, 1)) == q3("012012")

    def test_single_symbol(self):
        assert duplicate(q2("0"), DupStep(0, 1, 0)) == q2("00")

    def test_with_transposition(self):
        # a="", b="0", c="1": result is b c b = 010
        assert duplicate(q2("01"), DupStep(0, 1, 1)) == q2("010")

    def test_length_arithmetic(self):
        x = q2("010011")
        for p, l, t in [(0, 3, 2), (2, 1, 0), (1, 2, 3)]:
            assert len(duplicate(x, DupStep(p, l, t))) == len(x) + l

    def test_bounds_errors_name_constraint(self):
        with pytest.raises(StepBoundsError, match="position"):
            duplicate(q2("01"), DupStep(2, 1, 0))
        with pytest.raises(StepBoundsError, match="transposition"):
            duplicate(q2("01"), DupStep(0, 1, 2))
        with pytest.raises(StepBoundsError):
            DupStep(0, 0, 0)


class TestDeduplicate:
    def test_inverse_of_duplicate_example(self):
        assert deduplicate(q3("012012"), Decomposition(1, 2, 1)) == q3("0120")

    def test_tandem(self):
        assert deduplicate(q2("0101"), Decomposition(0, 2, 0)) == q2("01")
        assert deduplicate(q2("00"), Decomposition(0, 1, 0)) == q2("0")

    def test_unequal_blocks_rejected(self):
        with pytest.raises(InvalidDecompositionError):
            deduplicate(q2("0110"), Decomposition(0, 2, 0))

    def test_overflowing_decomposition_rejected(self):
        with pytest.raises(InvalidDecompositionError):
            deduplicate(q2("00"), Decomposition(0, 2, 0))

    def test_round_trip_exhaustive_small(self):
        # deduplicate(duplicate(x, step)) == x for every valid step
        for x in all_binary_strings(1, 6):
            m = len(x)
            for l in range(1, m + 1):
                for p in range(0, m - l + 1):
                    for t in range(0, m - l - p + 1):
                        y = duplicate(x, DupStep(p, l, t))
                        assert len(y) == m + l
                        back = deduplicate(y, Decomposition(p, l, t))
                        assert back == x


class TestParents:
    def test_spec_examples(self):
        assert parents(q2("0101")) == {q2("011"), q2("010"), q2("01")}
        assert parents(q2("00")) == {q2("0")}
        assert parents(q2("01")) == set()

    def test_matches_brute_force_binary(self):
        for y in all_binary_strings(2, 9):
            assert parents(y) == brute_parents(y)

    def test_matches_brute_force_ternary(self):
        for y in all_qary_strings(3, 2, 6):
            assert parents(y) == brute_parents(y)

    def test_empty_iff_root(self):
        for y in all_binary_strings(1, 8):
            assert (parents(y) == set()) == is_root(y)

    def test_root_preserved_by_deduplication(self):
        for y in all_binary_strings(2, 8):
            for u in parents(y):
                assert root_of(u) == root_of(y)
        for y in all_qary_strings(3, 2, 6):
            for u in parents(y):
                assert root_of(u) == root_of(y)

    def test_permutation_equivariance(self):
        rng = random.Random(11)
        for _ in range(200):
            q = rng.choice([2, 3, 4])
            m = rng.randint(2, 8)
            y = QString(bytes(rng.randrange(q) for _ in range(m)), q)
            perm = tuple(rng.sample(range(q), q))
            assert parents(relabel(y, perm)) == {relabel(u, perm) for u in parents(y)}


class TestApproxParents:
    def test_spec_examples(self):
        assert approx_parents(q2("0011"), 1) == {q2("011"), q2("001"), q2("00")}
        assert approx_parents(q2("0011"), Fraction(1, 2)) == {q2("011"), q2("001")}

    def test_beta_zero_reduces_to_exact(self):
        for y in all_binary_strings(2, 8):
            assert approx_parents(y, 0) == parents(y)

    def test_superset_of_parents(self):
        for y in all_binary_strings(2, 8):
            for beta in (Fraction(1, 3), Fraction(1, 2), 1):
                assert approx_parents(y, beta) >= parents(y)

    def test_matches_brute_force(self):
        for y in all_binary_strings(2, 8):
            for beta in (Fraction(1, 2), Fraction(2, 3)):
                assert approx_parents(y, beta) == brute_approx_parents(y, beta)

    def test_beta_out_of_range(self):
        with pytest.raises(DomainError):
            approx_parents(q2("00"), Fraction(3, 2))
        with pytest.raises(DomainError):
            approx_parents(q2("00"), -1)


class TestRoots:
    def test_root_of_examples(self):
        assert root_of(q3("001022112")) == q3("012")
        assert root_of(q3("2")) == q3("2")
        assert root_of(q2("1100")) == q2("10")

    def test_is_root_examples(self):
        assert is_root(q3("012"))
        assert not is_root(q2("00"))
        assert is_root(QString.parse("0", 5))

    def test_root_of_is_idempotent_root(self):
        for x in all_binary_strings(1, 8):
            r = root_of(x)
            assert is_root(r)
            assert root_of(r) == r


class TestPeriodExponent:
    def test_examples(self):
        assert period_exponent(q2("0101")) == (2, Fraction(2))
        assert period_exponent(q2("000")) == (1, Fraction(3))
        assert period_exponent(q3("012")) == (3, Fraction(1))

    def test_non_dividing_period(self):
        assert period_exponent(q2("01010")) == (2, Fraction(5, 2))

    def test_vs_brute_force_binary(self):
        for v in all_binary_strings(1, 12):
            p, e = period_exponent(v)
            assert p == brute_period(v)
            assert e == Fraction(len(v), p)

    def test_vs_brute_force_ternary(self):
        for v in all_qary_strings(3, 1, 8):
            assert period_exponent(v)[0] == brute_period(v)

    def test_vs_brute_force_sampled_longer(self):
        rng = random.Random(7)
        for _ in range(3000):
            q = rng.choice([2, 3])
            m = rng.randint(9, 12)
            v = QString(bytes(rng.randrange(q) for _ in range(m)), q)
            assert period_exponent(v)[0] == brute_period(v)


class TestCanonicalize:
    def test_examples(self):
        c, perm = canonicalize(q2("1100"))
        assert c == q2("0011")
        assert perm == (1, 0)
        c, perm = canonicalize(q2("0011"))
        assert (c, perm) == (q2("0011"), (0, 1))
        c, perm = canonicalize(q3("2021"))
        assert c == q3("0102")
        assert perm == (1, 2, 0)

    def test_idempotent(self):
        rng = random.Random(3)
        for _ in range(300):
            q = rng.choice([2, 3, 4])
            v = QString(bytes(rng.randrange(q) for _ in range(rng.randint(1, 10))), q)
            c, perm = canonicalize(v)
            assert relabel(v, perm) == c
            c2, perm2 = canonicalize(c)
            assert c2 == c
            assert perm2 == tuple(range(q))

    def test_unused_symbols_keep_order(self):
        c, perm = canonicalize(QString.parse("00", 4))
        assert c == QString.parse("00", 4)
        assert perm == (0, 1, 2, 3)


class TestBetaParsing:
    def test_accepted_forms(self):
        assert parse_beta("1/2") == Fraction(1, 2)
        assert parse_beta("0") == 0
        assert parse_beta("1") == 1

    def test_rejected_forms(self):
        for bad in ("0.5", "1e-1", "2/1", "-1/2", "x"):
            with pytest.raises(DomainError):
                parse_beta(bad)


class TestTextFormat:
    def test_header_roundtrip(self):
        text = write_strings([q3("0120"), q3("012")])
        assert text == "q=3\n0120\n012\n"
        back = read_strings(text)
        assert back == [q3("0120"), q3("012")]

    def test_explicit_q_argument(self):
        assert read_strings("01\n10\n", q=3) == [q3("01"), q3("10")]

    def test_inferred_alphabet(self):
        xs = read_strings("021\n")
        assert xs[0].q == 3

    def test_hamming(self):
        assert hamming(q2("0011"), q2("0101")) == 2
        with pytest.raises(DomainError):
            hamming(q2("0"), q2("00"))
