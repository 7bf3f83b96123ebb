from itertools import product

import pytest

from kjuggle.errors import DomainError
from kjuggle.kostant import (canonical_roots, count_capacity_restricted,
                             count_partitions, enumerate_partitions,
                             make_partition, partition_weight, type_a_reachable)
from kjuggle.roots import (eminus, eplus, esingle, highest_root,
                           positive_roots, weight_from_simple)

A3 = positive_roots("A", 3)


def test_worked_example_count_and_multisets():
    mu = weight_from_simple("A", 3, (1, 2, 1))
    parts = enumerate_partitions(mu, A3)
    assert count_partitions(mu, A3) == 5
    assert set(parts) == {
        make_partition([eminus(1, 2), eminus(2, 3), eminus(2, 3), eminus(3, 4)]),
        make_partition([eminus(1, 3), eminus(2, 4)]),
        make_partition([eminus(1, 3), eminus(2, 3), eminus(3, 4)]),
        make_partition([eminus(1, 2), eminus(2, 3), eminus(2, 4)]),
        make_partition([eminus(1, 4), eminus(2, 3)]),
    }


def test_zero_weight_has_one_partition():
    assert count_partitions((0, 0, 0, 0), A3) == 1
    assert enumerate_partitions((0, 0, 0, 0), A3) == [()]


def test_unreachable_weight_counts_zero():
    assert count_partitions((-1, 1, 0, 0), A3) == 0
    assert enumerate_partitions((0, 1, -1, 0), [eminus(1, 2)]) == []


def test_doubled_highest_root_values():
    # brute-force anchors: 3, 10, 125 by independent flow enumeration
    assert count_partitions((2, 0, -2), positive_roots("A", 2)) == 3
    assert count_partitions((2, 0, 0, -2), A3) == 10
    assert count_partitions((2, 0, 0, 0, 0, -2), positive_roots("A", 5)) == 125


def test_other_type_highest_roots():
    assert count_partitions(highest_root("B", 2), positive_roots("B", 2)) == 3
    assert count_partitions(highest_root("C", 3), positive_roots("C", 3)) == 10
    assert count_partitions(highest_root("D", 4), positive_roots("D", 4)) == 15


def test_count_matches_enumeration_everywhere_small():
    for lie_type, rank in (("A", 3), ("B", 2), ("C", 3), ("D", 4)):
        roots = positive_roots(lie_type, rank)
        n = len(highest_root(lie_type, rank))
        for head in product(range(-1, 2), repeat=n):
            parts = enumerate_partitions(head, roots)
            assert count_partitions(head, roots) == len(parts)
            for p in parts:
                assert partition_weight(p, n) == tuple(head)


def test_restriction_monotonicity():
    small = [eminus(1, 2), eminus(2, 3), eminus(3, 4)]
    for head in product(range(3), repeat=3):
        mu = head + (-sum(head),)
        assert count_partitions(mu, small) <= count_partitions(mu, A3)


def test_type_a_reachability_criterion():
    for mu in product(range(-2, 3), repeat=4):
        expected = type_a_reachable(mu)
        assert (count_partitions(mu, A3) > 0) == expected, mu


def test_canonical_roots_dedupes_and_sorts():
    roots = canonical_roots([eminus(2, 3), eminus(1, 2), eminus(2, 3), eplus(1, 2)])
    assert roots == (eminus(1, 2), eminus(2, 3), eplus(1, 2))


class TestCapacityRestricted:
    LAM5 = [eminus(i, j) for i in range(1, 4) for j in range(i + 1, 6)]

    def test_reference_value(self):
        # x^3 coefficient of the two-ball periodic row: 11
        target = (1, 1, 0, -1, -1)
        assert count_capacity_restricted(target, self.LAM5, (1, 1), 2) == 11

    def test_vacuous_capacity_equals_plain_count(self):
        target = (1, 1, 0, -1, -1)
        plain = count_partitions(target, self.LAM5)
        assert count_capacity_restricted(target, self.LAM5, (1, 1), 9) == plain

    def test_zero_target(self):
        assert count_capacity_restricted((0, 0, 0), [eminus(1, 2)], (1,), 2) == 1

    def test_initial_over_capacity(self):
        assert count_capacity_restricted((0, 0, 0), [eminus(1, 2)], (3,), 2) == 0

    def test_magic_initial_relaxes_budget(self):
        # the magic ball at height 3 raises that landing budget by one
        target = (2, -1, -1)
        lam = [eminus(1, 2), eminus(1, 3)]
        assert count_capacity_restricted(target, lam, (2, 0, -1), 2) == 1
        assert count_capacity_restricted(target, lam, (2, 0, -1), 1) == 0

    def test_rejects_non_minus_roots(self):
        with pytest.raises(DomainError):
            count_capacity_restricted((1, 1), [eplus(1, 2)], (1,), 2)
        with pytest.raises(DomainError):
            count_capacity_restricted((1, 0), [esingle(1)], (1,), 2)

    def test_rejects_bad_capacity(self):
        with pytest.raises(DomainError):
            count_capacity_restricted((0, 0), [eminus(1, 2)], (0,), 0)
