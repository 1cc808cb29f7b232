"""Property checkers, extremal numbers/sets, brute-force oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from avoider_enforcer import (
    CapacityExceededError,
    PROPERTY_IDS,
    brute_force_extremal,
    edge_count,
    extremal_number,
    extremal_set,
    first_satisfied_round,
    get_property,
    has_min_degree_one,
    is_bipartite,
    is_connected_spanning,
    is_planar,
)

from conftest import all_edges


def k_complete(n):
    return all_edges(n)


def k_bipartite(a, b):
    return [(u, v) for u in range(a) for v in range(a, a + b)]


def cycle(n):
    return sorted(tuple(sorted((i, (i + 1) % n))) for i in range(n))


# -- checkers SR examples ----------------------------------------------------


def test_planarity_known_graphs():
    assert is_planar(k_complete(4), 4)
    assert not is_planar(k_complete(5), 5)
    assert not is_planar(k_bipartite(3, 3), 6)
    assert is_planar([], 7)


def test_bipartite_known_graphs():
    assert is_bipartite(cycle(4), 4)
    assert not is_bipartite(cycle(3), 3)
    assert is_bipartite([], 7)


def test_spanning_and_min_degree():
    path = [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert is_connected_spanning(path, 5)
    assert has_min_degree_one(path, 5)
    matching = [(0, 1), (2, 3)]
    assert has_min_degree_one(matching, 4)
    assert not is_connected_spanning(matching, 4)
    with_isolated = [(0, 1), (1, 2)]
    assert not has_min_degree_one(with_isolated, 4)
    assert not is_connected_spanning(with_isolated, 4)


# -- extremal numbers --------------------------------------------------------


def test_extremal_numbers_at_ten():
    assert extremal_number("non_planar", 10) == 24
    assert extremal_number("non_bipartite", 10) == 25
    assert extremal_number("min_degree_one", 10) == 36
    assert extremal_number("connected_spanning", 10) == 36


def test_extremal_number_small_planar_special_case():
    assert extremal_number("non_planar", 2) == 1


@pytest.mark.parametrize("prop", PROPERTY_IDS)
@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_brute_force_matches_closed_form(prop, n):
    assert brute_force_extremal(prop, n) == extremal_number(prop, n)


def test_brute_force_capacity():
    with pytest.raises(CapacityExceededError):
        brute_force_extremal("non_bipartite", 8)


# -- extremal sets -----------------------------------------------------------


def test_witness_k22():
    witness = extremal_set("non_bipartite", 4)
    assert witness == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert is_bipartite(witness, 4)


def test_witness_min_degree_k3():
    witness = extremal_set("min_degree_one", 4)
    assert witness == [(0, 1), (0, 2), (1, 2)]
    assert not has_min_degree_one(witness, 4)


def test_witness_planar_triangulation_k5():
    witness = extremal_set("non_planar", 5)
    assert len(witness) == 9
    assert is_planar(witness, 5)


@pytest.mark.parametrize("prop", PROPERTY_IDS)
@pytest.mark.parametrize("n", [3, 4, 5, 6, 9, 12])
def test_witness_size_and_safety(prop, n):
    obj = get_property(prop)
    witness = extremal_set(prop, n)
    assert len(witness) == len(set(witness)) == extremal_number(prop, n)
    assert not obj.check(witness, n)


@pytest.mark.parametrize("n", [4, 5, 6, 8])
def test_witness_defect_edges(n):
    # Non-planar witness is maximal planar: every absent edge breaks planarity.
    witness = extremal_set("non_planar", n)
    missing = set(all_edges(n)) - set(witness)
    for e in missing:
        assert not is_planar(witness + [e], n)
    # Spanning/min-degree witness: any edge at the isolated vertex covers it.
    witness = extremal_set("min_degree_one", n)
    for u in range(n - 1):
        assert has_min_degree_one(witness + [(u, n - 1)], n)
        assert is_connected_spanning(witness + [(u, n - 1)], n)
    # Bipartite witness: any same-side edge closes an odd cycle.
    witness = extremal_set("non_bipartite", n)
    half = (n + 1) // 2
    for u in range(half - 1):
        assert not is_bipartite(witness + [(u, u + 1)], n)


# -- monotonicity ------------------------------------------------------------


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_checkers_are_monotone(data):
    n = data.draw(st.integers(min_value=2, max_value=8))
    edges = all_edges(n)
    chosen = data.draw(st.sets(st.sampled_from(edges), max_size=len(edges) - 1))
    extra = data.draw(st.sampled_from([e for e in edges if e not in chosen]))
    for prop in PROPERTY_IDS:
        obj = get_property(prop)
        if obj.check(sorted(chosen), n):
            assert obj.check(sorted(chosen | {extra}), n)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_first_satisfied_round_equals_linear_scan(data):
    n = data.draw(st.integers(min_value=2, max_value=7))
    edges = all_edges(n)
    sequence = data.draw(st.permutations(edges))
    cut = data.draw(st.integers(min_value=0, max_value=len(edges)))
    sequence = list(sequence)[:cut]
    for prop in PROPERTY_IDS:
        obj = get_property(prop)
        scan = None
        for r in range(1, len(sequence) + 1):
            if obj.check(sequence[:r], n):
                scan = r
                break
        assert first_satisfied_round(obj, n, sequence) == scan
