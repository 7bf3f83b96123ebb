import pytest

from kjuggle.errors import DomainError
from kjuggle.juggling import (ALL_THROWS, Throw, ThrowSet, count_sequences,
                              enumerate_labeled_sequences, enumerate_sequences,
                              label_component, labeled_count, net_change_vector,
                              normalize_state, successors)


def test_normalize_strips_trailing_zeros_only():
    assert normalize_state((1, 0, 0)) == (1,)
    assert normalize_state((0, 1)) == (0, 1)
    assert normalize_state((0, 0)) == ()
    assert normalize_state(()) == ()


class TestSuccessors:
    def test_two_ball_options(self):
        got = {s for s, _ in successors((1, 1), 1, 2, ALL_THROWS, 5)}
        assert {(2,), (1, 1), (1, 0, 1)} <= got
        assert got == {(2,), (1, 1), (1, 0, 1), (1, 0, 0, 1)}

    def test_pure_descent(self):
        assert successors((0, 1, 1), 1, None, ALL_THROWS, 5) == [((1, 1), ())]

    def test_magic_cancellation_transition(self):
        # three balls thrown to heights 1, 2, 3; the height-2 throw cancels
        hits = [s for s, combo in successors((3, 0, -1), 2, None, ALL_THROWS, 7)
                if combo == (1, 2, 3)]
        assert hits == [(1, 0, 1)]

    def test_magic_at_height_one_is_dead(self):
        assert successors((-1, 1), 1, None, ALL_THROWS, 5) == []

    def test_capacity_filters_states(self):
        got = {s for s, _ in successors((2,), 1, 1, ALL_THROWS, 3)}
        assert (2,) not in got and (1, 1) in got

    def test_needs_landing_bound_when_throwing(self):
        with pytest.raises(DomainError):
            successors((1,), 1)


class TestCounts:
    def test_periodic_two_ball_values(self):
        assert count_sequences((1, 1), (1, 1), 3, 2) == 11
        assert count_sequences((2,), (2,), 2, 2) == 3

    def test_ball_conservation(self):
        assert count_sequences((1,), (2,), 5) == 0

    def test_single_ball_powers_of_two(self):
        for n in range(1, 8):
            assert count_sequences((1,), (1,), n) == 2 ** (n - 1)

    def test_length_zero(self):
        assert count_sequences((1, 1), (1, 1), 0) == 1
        assert count_sequences((1, 1), (2,), 0) == 0

    def test_magic_cancel_beyond_terminal_window(self):
        # the initial state is taller than length + terminal height
        assert count_sequences((2, 0, -1), (1,), 1) == 1

    def test_initial_over_capacity(self):
        assert count_sequences((3,), (3,), 2, 2) == 0

    def test_capacity_monotone_and_saturating(self):
        for a, b in (((2, 1), (2, 1)), ((1, 1, 1), (3,))):
            for n in (1, 2, 3):
                prev = 0
                for m in (1, 2, 3):
                    cur = count_sequences(a, b, n, m)
                    assert cur >= prev
                    prev = cur
                assert count_sequences(a, b, n, 3) == count_sequences(a, b, n)

    def test_throw_restriction_monotone(self):
        small = ThrowSet.from_heights((1,))
        big = ThrowSet.from_heights((1, 2, 3))
        for n in (1, 2, 3):
            assert (count_sequences((1, 1), (1, 1), n, None, small)
                    <= count_sequences((1, 1), (1, 1), n, None, big)
                    <= count_sequences((1, 1), (1, 1), n))


def test_enumeration_matches_counting():
    states = [(), (1,), (2,), (1, 1), (0, 1), (2, 1)]
    for a in states:
        for b in states:
            for n in (1, 2, 3):
                for m in (None, 1, 2):
                    seqs = enumerate_sequences(a, b, n, m)
                    assert len(seqs) == count_sequences(a, b, n, m)
                    assert len(set(seqs)) == len(seqs)


def test_enumerated_sequences_are_valid():
    seqs = enumerate_sequences((2, 1, 0, -1), (1, 1), 3)
    assert seqs
    for seq in seqs:
        assert seq.states[0] == (2, 1, 0, -1)
        assert seq.states[-1] == (1, 1)
        # never throw from a negative hand
        for state in seq.states[:-1]:
            if state:
                assert state[0] >= 0
        assert net_change_vector(seq, 5) == (2, 1, 0, -2, -1)


def test_conveyor_example_sequence_and_net_change():
    seqs = enumerate_sequences((1, 1), (1, 1), 3)
    states = {s.states for s in seqs}
    assert ((1, 1), (2,), (0, 1, 1), (1, 1)) in states
    for seq in seqs:
        assert net_change_vector(seq, 5) == (1, 1, 0, -1, -1)


def test_magic_example_sequence_present():
    seqs = enumerate_sequences((2, 1, 0, -1), (1, 1), 3)
    states = {s.states for s in seqs}
    assert ((2, 1, 0, -1), (3, 0, -1), (1, 0, 1), (1, 1)) in states


def test_net_change_of_throwless_sequence_is_zero():
    seqs = enumerate_sequences((0, 0, 1), (1,), 2)
    assert len(seqs) == 1 and seqs[0].throws == ()
    assert net_change_vector(seqs[0], 3) == (0, 0, 0)


def test_net_change_depends_only_on_endpoints():
    for a, b, n in (((1, 1), (2,), 2), ((2,), (1, 1), 2), ((1, 0, 1), (2,), 3),
                    ((2, 0, -1), (1,), 2)):
        ambient = max(len(a), n + len(b))
        expected = [0] * ambient
        for k, x in enumerate(a):
            expected[k] += x
        for k, x in enumerate(b):
            expected[n + k] -= x
        seqs = enumerate_sequences(a, b, n)
        assert seqs
        for seq in seqs:
            assert net_change_vector(seq, ambient) == tuple(expected)


class TestLabeled:
    def test_product_of_two_single_ball_labels(self):
        a = ((1, 1),)
        assert labeled_count(a, a, 3) == 16

    def test_single_label_reduces_to_plain_count(self):
        a = ((1,), (1,))
        assert labeled_count(a, a, 3) == count_sequences((1, 1), (1, 1), 3)

    def test_capacity_is_rejected(self):
        with pytest.raises(DomainError):
            labeled_count(((1, 1),), ((1, 1),), 2, capacity=2)

    def test_label_decomposition(self):
        state = ((1, 2, 1), (1, -1, 0), (0, 1, 2))
        assert label_component(state, 0) == (1, 1)
        assert label_component(state, 1) == (2, -1, 1)
        assert label_component(state, 2) == (1, 0, 2)

    def test_joint_enumeration_matches_product(self):
        a = ((1, 0), (0, 1))
        b = ((0, 1), (1, 0))
        for n in (1, 2, 3):
            assert len(enumerate_labeled_sequences(a, b, n)) == labeled_count(a, b, n)


def test_throwset_validation():
    with pytest.raises(DomainError):
        ThrowSet.from_heights((0,))
    with pytest.raises(DomainError):
        ThrowSet.from_throws([(0, 1)])
    ts = ThrowSet.from_throws([(1, 2), (2, 1)])
    assert ts.allows(1, 2) and not ts.allows(1, 1)
    assert ALL_THROWS.allows(9, 9)
    assert Throw(2, 3).height == 3
