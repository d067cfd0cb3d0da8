from itertools import combinations

import pytest

from matchramsey.alternation import alternation_number
from matchramsey.errors import InputError
from matchramsey.hypergraph import Hypergraph, chromatic_number, complete_uniform
from matchramsey.kneser import kneser_power, theorem1_lower_bound

from conftest import small_corpus


def brute_kneser_edges(h, r):
    edges = list(h.edges)
    out = set()
    for combo in combinations(range(len(edges)), r):
        if all(edges[a] & edges[b] == 0 for a, b in combinations(combo, 2)):
            out.add(frozenset(i + 1 for i in combo))
    return out


def kneser_edge_sets(kg):
    return {frozenset(i + 1 for i in range(kg.graph.n) if e >> i & 1) for e in kg.graph.edges}


def test_petersen_graph():
    kg = kneser_power(complete_uniform(5, 2), 2)
    assert kg.graph.n == 10 and len(kg.graph.edges) == 15
    assert chromatic_number(kg.graph).value == 3


def test_three_uniform_kneser_of_k6():
    kg = kneser_power(complete_uniform(6, 2), 3)
    assert kg.graph.n == 15 and len(kg.graph.edges) == 15


def test_correspondence_lists_base_edges():
    kg = kneser_power(complete_uniform(3, 2), 2)
    assert [c["edge"] for c in kg.correspondence_json()] == [[1, 2], [1, 3], [2, 3]]
    assert kg.graph.edges == ()


def test_rejects_small_r():
    with pytest.raises(InputError):
        kneser_power(complete_uniform(4, 2), 1)
    with pytest.raises(InputError):
        theorem1_lower_bound(4, 5, 2)


@pytest.mark.parametrize("r", [2, 3])
def test_kneser_power_matches_combinations(r):
    for h in small_corpus(seed=r, count=30):
        assert kneser_edge_sets(kneser_power(h, r)) == brute_kneser_edges(h, r)


def test_lower_bound_values():
    assert theorem1_lower_bound(5, 2, 2) == 3
    assert theorem1_lower_bound(6, 2, 3) == 2
    assert theorem1_lower_bound(7, 2, 3) == 3
    assert theorem1_lower_bound(4, 4, 2) == 0


@pytest.mark.parametrize("r", [2, 3])
def test_chromatic_number_dominates_alternation_bound(r):
    for h in small_corpus(seed=10 + r, count=30, max_n=6, max_edges=12):
        chi = chromatic_number(kneser_power(h, r).graph).value
        assert chi >= theorem1_lower_bound(h.n, alternation_number(h, r), r)


def test_bound_at_full_alternation():
    for n in range(0, 6):
        for r in (2, 3):
            assert theorem1_lower_bound(n, n, r) == 0
    assert theorem1_lower_bound(6, 2, 2) == 4
