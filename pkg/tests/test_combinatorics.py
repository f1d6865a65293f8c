import math
from itertools import permutations

import pytest

from ncc.combinatorics import (
    binomial,
    f_r,
    gamma_exact,
    gamma_upper,
    rank_perm,
    rank_subset,
    stirling2,
    stirling2_assoc,
    stirpar,
    stirpar_order_rank,
    stirpar_rank,
    unrank_perm,
    unrank_subset,
)


def set_partitions(n):
    """All partitions of {1..n} as lists of sets (brute-force oracle)."""
    if n == 0:
        yield []
        return
    for rest in set_partitions(n - 1):
        for i in range(len(rest)):
            yield rest[:i] + [rest[i] | {n}] + rest[i + 1 :]
        yield rest + [{n}]


class TestBinomial:
    def test_small_values(self):
        assert binomial(4, 2) == 6
        assert binomial(6, 3) == 20

    def test_empty_choice(self):
        for m in range(10):
            assert binomial(m, 0) == 1

    def test_k_above_m_is_zero(self):
        assert binomial(3, 5) == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)


class TestStirling2:
    def test_paper_values(self):
        assert stirling2(5, 3) == 25
        assert stirling2(5, 2) == 15

    def test_diagonal(self):
        for n in range(12):
            assert stirling2(n, n) == 1

    def test_recurrence(self):
        for n in range(1, 21):
            for k in range(1, n + 1):
                assert stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)

    def test_against_partition_enumeration(self):
        for n in range(1, 9):
            counts = {}
            for p in set_partitions(n):
                counts[len(p)] = counts.get(len(p), 0) + 1
            for k in range(1, n + 1):
                assert stirling2(n, k) == counts.get(k, 0)


class TestAssociatedStirling:
    def test_r1_reduces_to_plain(self):
        for n in range(13):
            for k in range(n + 1):
                assert stirling2_assoc(1, n, k) == stirling2(n, k)

    def test_small_case(self):
        assert stirling2_assoc(2, 4, 2) == 3

    def test_pigeonhole_zero(self):
        assert stirling2_assoc(2, 3, 2) == 0
        assert stirling2_assoc(3, 8, 3) == 0

    def test_against_partition_enumeration(self):
        for n in range(1, 9):
            parts = list(set_partitions(n))
            for r in (2, 3):
                for k in range(1, n + 1):
                    expect = sum(
                        1 for p in parts if len(p) == k and all(len(b) >= r for b in p)
                    )
                    assert stirling2_assoc(r, n, k) == expect

    def test_alternating_sum_identities(self):
        # S_2 and S_3 admit alternating-sum expansions in terms of S and S_2
        for n in range(1, 13):
            for k in range(1, n + 1):
                s2 = sum(
                    (-1) ** j
                    * math.factorial(n)
                    * stirling2(n - j, k - j)
                    // (math.factorial(j) * math.factorial(n - j))
                    for j in range(0, min(k, n) + 1)
                )
                assert s2 == stirling2_assoc(2, n, k)
                s3 = sum(
                    (-1) ** j
                    * math.factorial(n)
                    * stirling2_assoc(2, n - 2 * j, k - j)
                    // (2**j * math.factorial(j) * math.factorial(n - 2 * j))
                    for j in range(0, min(k, n // 2) + 1)
                )
                assert s3 == stirling2_assoc(3, n, k)


class TestBlockSizeCounts:
    def test_f_r_trivial(self):
        for n in range(10):
            for k in range(n + 1):
                assert f_r(1, n, k) == 0

    def test_f_r_small(self):
        assert f_r(2, 4, 2) == 7 - 3
        parts = [p for p in set_partitions(5) if len(p) == 3]
        small = sum(1 for p in parts if any(len(b) < 3 for b in p))
        assert f_r(3, 5, 3) == small == 25 - stirling2_assoc(3, 5, 3)

    def test_gamma_exact_examples(self):
        assert gamma_exact(1, 3, 2) == 3
        for n in range(1, 10):
            assert gamma_exact(n, n, 1) == 1

    def test_gamma_exact_against_enumeration(self):
        for n in range(1, 10):
            parts = list(set_partitions(n))
            for k in range(1, n + 1):
                k_parts = [p for p in parts if len(p) == k]
                for h in range(1, n + 1):
                    expect = sum(1 for p in k_parts if any(len(b) == h for b in p))
                    assert gamma_exact(h, n, k) == expect

    def test_gamma_upper_dominates(self):
        for n in range(1, 11):
            for k in range(1, n + 1):
                for h in range(1, n + 1):
                    assert gamma_exact(h, n, k) <= gamma_upper(h, n, k)


class TestSubsetEnumeration:
    def test_lexicographic_ends(self):
        assert unrank_subset(4, 2, 1) == (0, 1)
        assert unrank_subset(4, 2, 6) == (2, 3)

    def test_bijection(self):
        for m in range(1, 9):
            for k in range(0, m + 1):
                seen = set()
                for j in range(1, binomial(m, k) + 1):
                    s = unrank_subset(m, k, j)
                    assert len(s) == k and all(0 <= x < m for x in s)
                    assert rank_subset(m, s) == j
                    seen.add(s)
                assert len(seen) == binomial(m, k)

    def test_rank_out_of_range(self):
        with pytest.raises(ValueError):
            unrank_subset(4, 2, 0)
        with pytest.raises(ValueError):
            unrank_subset(4, 2, 7)


class TestPermutationEnumeration:
    def test_lexicographic_ends(self):
        assert unrank_perm(3, 1) == (1, 2, 3)
        assert unrank_perm(3, 6) == (3, 2, 1)

    def test_bijection(self):
        for k in range(1, 7):
            outs = [unrank_perm(k, i) for i in range(1, math.factorial(k) + 1)]
            assert outs == sorted(set(outs))  # lexicographic and distinct
            for i, p in enumerate(outs, start=1):
                assert rank_perm(p) == i

    def test_rank_out_of_range(self):
        with pytest.raises(ValueError):
            unrank_perm(3, 0)
        with pytest.raises(ValueError):
            unrank_perm(3, 7)


class TestPartitionEnumeration:
    def test_worked_examples(self):
        assert stirpar(5, 3, 4) == [frozenset({4, 5}), frozenset({1, 3}), frozenset({2})]
        assert stirpar(5, 3, 23) == [frozenset({5}), frozenset({1}), frozenset({2, 3, 4})]

    def test_all_singletons(self):
        for n in range(1, 8):
            assert stirpar(n, n, 1) == [frozenset({i}) for i in range(1, n + 1)]

    def test_bijection_and_inverse(self):
        for n in range(1, 9):
            for k in range(1, min(n, 4) + 1):
                seen = set()
                for x in range(1, stirling2(n, k) + 1):
                    p = stirpar(n, k, x)
                    assert len(p) == k
                    assert stirpar_rank(p) == x
                    seen.add(frozenset(p))
                assert len(seen) == stirling2(n, k)

    def test_rank_out_of_range(self):
        with pytest.raises(ValueError):
            stirpar(5, 3, 0)
        with pytest.raises(ValueError):
            stirpar(5, 3, 26)

    def test_worked_examples_rank_back(self):
        assert stirpar_rank(stirpar(5, 3, 4)) == 4
        assert stirpar_rank(stirpar(5, 3, 23)) == 23

    def test_order_recovery_from_unordered_blocks(self):
        for n in range(1, 8):
            for k in range(1, min(n, 4) + 1):
                for x in range(1, stirling2(n, k) + 1):
                    p = stirpar(n, k, x)
                    for shuffled in (list(reversed(p)), sorted(p, key=min)):
                        ordered, rank = stirpar_order_rank(shuffled)
                        assert ordered == p
                        assert rank == x

    def test_invalid_partition_rejected(self):
        with pytest.raises(ValueError):
            stirpar_rank([frozenset({1, 2}), frozenset({2, 3})])
        with pytest.raises(ValueError):
            stirpar_rank([frozenset(), frozenset({1})])
