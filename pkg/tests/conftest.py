from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from matchramsey.hypergraph import Hypergraph, complete_uniform, vertices_of


@st.composite
def hypergraphs(draw, max_n: int = 6, max_edges: int = 8, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    if n == 0:
        return Hypergraph(0, ())
    masks = draw(st.lists(st.integers(1, (1 << n) - 1), max_size=max_edges))
    return Hypergraph(n, tuple(masks))


def brute_matching_number(h: Hypergraph) -> int:
    edges = list(h.edges)
    best = 0
    for size in range(1, len(edges) + 1):
        for subset in combinations(edges, size):
            if all(a & b == 0 for a, b in combinations(subset, 2)):
                best = size
                break
    return best


def small_corpus(seed: int = 7, count: int = 40, max_n: int = 6, max_edges: int = 8) -> list[Hypergraph]:
    rng = random.Random(seed)
    out = [complete_uniform(n, k) for n, k in [(3, 2), (4, 2), (5, 2), (4, 3), (6, 3)]]
    out.append(Hypergraph(4, ()))
    while len(out) < count:
        n = rng.randint(1, max_n)
        m = rng.randint(0, max_edges)
        out.append(Hypergraph(n, tuple(rng.randint(1, (1 << n) - 1) for _ in range(m))))
    return out


@pytest.fixture
def triangle() -> Hypergraph:
    return complete_uniform(3, 2)


def edge_sets(h: Hypergraph) -> set[frozenset[int]]:
    return {frozenset(vertices_of(e)) for e in h.edges}


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.OUTCOMES:
        terminalreporter.section("acceptance criteria")
        for outcome in sorted(test_acceptance.OUTCOMES, key=lambda o: o.number):
            terminalreporter.write_line(outcome.line())
