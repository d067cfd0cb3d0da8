from itertools import product

import pytest
from hypothesis import given, settings

from matchramsey.errors import InputError
from matchramsey.hypergraph import (
    INFINITY,
    Hypergraph,
    chromatic_number,
    color_with,
    complete_uniform,
    has_matching_of_size,
    induced,
    is_proper_coloring,
    matching_number,
    maximum_matching,
)

from conftest import brute_matching_number, edge_sets, hypergraphs


@pytest.mark.parametrize("n,k,count", [(3, 2, 3), (5, 2, 10), (6, 3, 20)])
def test_complete_uniform_sizes(n, k, count):
    h = complete_uniform(n, k)
    assert len(h.edges) == count
    assert all(len(e) == k for e in edge_sets(h))


def test_triangle_edges(triangle):
    assert edge_sets(triangle) == {frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3})}


@pytest.mark.parametrize("n,k", [(3, 0), (3, 4)])
def test_complete_uniform_rejects(n, k):
    with pytest.raises(InputError):
        complete_uniform(n, k)


def test_duplicates_are_dropped_and_order_is_canonical():
    a = Hypergraph.from_lists(4, [[3, 4], [1, 2], [2, 1]])
    b = Hypergraph.from_lists(4, [[1, 2], [3, 4]])
    assert a == b
    assert a.edges == tuple(sorted(a.edges))


@pytest.mark.parametrize("bad", [{"n": 3, "edges": [[]]}, {"n": 3, "edges": [[4]]}, {"edges": []}, {"n": "3", "edges": []}])
def test_json_rejects_bad_input(bad):
    with pytest.raises(InputError):
        Hypergraph.from_json(bad)


def test_json_round_trip():
    h = Hypergraph.from_json({"n": 5, "edges": [[1, 2], [3, 4]]})
    assert Hypergraph.from_json(h.to_json()) == h


def test_induced_examples():
    assert induced(complete_uniform(4, 2), {1, 2, 3}).edges == complete_uniform(3, 2).edges
    assert induced(complete_uniform(4, 2), set()).edges == ()
    assert edge_sets(induced(complete_uniform(5, 2), {1, 3})) == {frozenset({1, 3})}


@given(hypergraphs())
def test_induced_edges_lie_inside(h):
    s = (1 << h.n) - 1 if h.n == 0 else 0b10101 & ((1 << h.n) - 1)
    sub = induced(h, s)
    assert set(sub.edges) <= set(h.edges)
    assert all(e & ~s == 0 for e in sub.edges)


def test_matching_examples(triangle):
    assert matching_number(complete_uniform(5, 2)) == 2
    assert matching_number(triangle) == 1
    assert matching_number(complete_uniform(6, 3)) == 2
    assert matching_number(Hypergraph(3, ())) == 0


def test_has_matching_examples(triangle):
    assert has_matching_of_size(complete_uniform(4, 2), 2)
    assert not has_matching_of_size(triangle, 2)
    assert has_matching_of_size(triangle, 0)
    assert has_matching_of_size(Hypergraph(2, ()), 0)


@settings(max_examples=200)
@given(hypergraphs(max_n=7, max_edges=12))
def test_matching_number_matches_subset_brute_force(h):
    nu = brute_matching_number(h)
    assert matching_number(h) == nu
    best = maximum_matching(h)
    assert all(a & b == 0 for i, a in enumerate(best) for b in best[i + 1:])
    assert has_matching_of_size(h, nu) and not has_matching_of_size(h, nu + 1)


@pytest.mark.parametrize("n", range(1, 10))
def test_matching_number_of_complete_uniform(n):
    for k in range(1, n + 1):
        assert matching_number(complete_uniform(n, k)) == n // k


def brute_chromatic(h: Hypergraph):
    if h.has_singleton():
        return INFINITY
    for k in range(0, h.n + 1):
        for colors in product(range(k), repeat=h.n):
            if is_proper_coloring(h, colors):
                return k
    raise AssertionError("unreachable")


def test_chromatic_examples(triangle):
    assert chromatic_number(Hypergraph.from_lists(2, [[1]])).value == INFINITY
    assert chromatic_number(triangle).value == 3
    assert chromatic_number(complete_uniform(4, 3)).value == 2
    assert chromatic_number(Hypergraph(0, ())).value == 0
    assert chromatic_number(Hypergraph(3, ())).value == 1


@settings(max_examples=120)
@given(hypergraphs(max_n=6, max_edges=8))
def test_chromatic_number_matches_brute_force_with_certificate(h):
    result = chromatic_number(h)
    assert result.value == brute_chromatic(h)
    if result.value != INFINITY:
        assert is_proper_coloring(h, result.coloring)
        assert len(set(result.coloring)) <= result.value
        if result.value >= 1 and h.n:
            assert color_with(h, result.value - 1) is None
