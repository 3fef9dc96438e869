"""Checks for the brute-force oracle itself."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unleaved import oracle
from helpers import iter_tree

# n_g for g = 0..16, pinned from a genus_histogram run; the sequence is
# OEIS A007323 and the g = 10 and g = 15 entries match the usual milestones
GENUS_COUNTS = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001,
                1693, 2857, 4806]


def test_histogram_matches_pinned_counts():
    assert oracle.genus_histogram(16) == GENUS_COUNTS


def test_oracle_count_returns_count_and_tree_size():
    assert oracle.oracle_count(10) == (204, 478)
    assert oracle.oracle_count(1) == (1, 2)


def test_from_gaps_basics():
    n0 = oracle.from_gaps([])
    assert n0.genus == 0 and n0.conductor == 0 and n0.multiplicity == 1
    s = oracle.from_gaps([1, 2, 4])
    assert s.genus == 3 and s.frobenius == 4 and s.multiplicity == 3
    assert s.jump == 2  # first two positive members are 3 and 5
    assert s.gap_list() == [1, 2, 4]


def test_from_gaps_rejects_non_closed_complement():
    with pytest.raises(oracle.ClosureViolation):
        oracle.from_gaps([2])
    with pytest.raises(oracle.ClosureViolation):
        oracle.from_gaps([1, 5, 6])  # 2 + 3 = 5 is missing


def test_from_generators():
    assert oracle.from_generators([2, 3]).gap_list() == [1]
    assert oracle.from_generators([3, 5, 7]).gap_list() == [1, 2, 4]
    with pytest.raises(ValueError):
        oracle.from_generators([4, 6])  # gcd 2: not a numerical semigroup
    with pytest.raises(ValueError):
        oracle.from_generators([])


def test_minimal_generators():
    assert oracle.minimal_generators(oracle.from_gaps([])) == [1]
    assert oracle.minimal_generators(oracle.from_gaps([1])) == [2, 3]
    assert oracle.minimal_generators(oracle.from_generators([4, 5, 6])) == [4, 5, 6]


def test_children_remove_one_right_generator_each():
    s = oracle.from_gaps([1, 2])  # <3,4,5>, every generator is a right one
    kids = oracle.oracle_children(s)
    assert [k.gap_list() for k in kids] == [[1, 2, 3], [1, 2, 4], [1, 2, 5]]
    assert all(k.genus == s.genus + 1 for k in kids)


def test_omega_and_shrink_cases():
    # ordinary and near-ordinary nodes have no positive left elements
    assert oracle.omega_and_shrink(oracle.from_gaps([])) == (0, None)
    assert oracle.omega_and_shrink(oracle.from_gaps([1])) == (0, None)
    # left elements {0, 4}: gcd 4, shrink is the whole of N0
    s = oracle.from_gaps([1, 2, 3, 5])
    omega, shrink = oracle.omega_and_shrink(s)
    assert omega == 4 and shrink.genus == 0
    # left elements {0, 3, 4}: gcd 1, shrink <3,4>
    s = oracle.from_gaps([1, 2, 5])
    omega, shrink = oracle.omega_and_shrink(s)
    assert omega == 1
    assert shrink == oracle.from_generators([3, 4])


def test_descendant_count_agrees_with_histogram():
    root = oracle.from_gaps([])
    for g in range(0, 9):
        assert oracle.descendant_count(root, g) == GENUS_COUNTS[g]
    # a leaf has one descendant at its own genus, none deeper without children
    leaf = oracle.from_generators([4, 5, 6])
    assert oracle.descendant_count(leaf, 4) == 1
    assert oracle.descendant_count(leaf, 5) == 0


def test_unleaved_node_count_small():
    # every node reaches genus 2 except the genus-2 leaves' absent children
    assert oracle.unleaved_node_count(2) == 4
    assert oracle.unleaved_node_count(8) == 124


def test_surviving_multiplicity_histogram_totals():
    hist = oracle.surviving_multiplicity_histogram(8)
    assert sum(hist.values()) == oracle.unleaved_node_count(8)
    assert hist[(8, 9)] == 1  # the deepest ordinary node survives as a leaf


def test_node_budget_guard(monkeypatch):
    monkeypatch.setenv(oracle.NODE_BUDGET_ENV, "10")
    assert oracle.node_budget() == 10
    with pytest.raises(oracle.ResourceLimit):
        oracle.genus_histogram(8)
    monkeypatch.delenv(oracle.NODE_BUDGET_ENV)
    assert oracle.node_budget() == 20_000_000


def test_members_window_and_contains_agree():
    for s in iter_tree(6):
        window = s.members_upto(s.bound + 5)
        for x in range(s.bound + 6):
            assert bool(window >> x & 1) == s.contains(x)


@given(st.sets(st.integers(min_value=2, max_value=12), min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_generator_gap_roundtrip(gens):
    gens = sorted(gens)
    try:
        s = oracle.from_generators(gens)
    except ValueError:
        import math
        assert math.gcd(*gens) != 1
        return
    again = oracle.from_gaps(s.gap_list())
    assert again == s
    assert oracle.from_generators(oracle.minimal_generators(s)) == s
