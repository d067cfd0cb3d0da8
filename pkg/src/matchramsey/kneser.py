"""General Kneser hypergraphs KG^r(H) and the alternation lower bound."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .hypergraph import Hypergraph, disjointness_table, vertices_of


@dataclass(frozen=True)
class KneserPower:
    graph: Hypergraph
    # vertex i + 1 of ``graph`` is the edge ``correspondence[i]`` of the base hypergraph
    correspondence: tuple[int, ...]

    def correspondence_json(self) -> list[dict]:
        return [{"vertex": i + 1, "edge": vertices_of(e)} for i, e in enumerate(self.correspondence)]


def kneser_power(h: Hypergraph, r: int) -> KneserPower:
    """KG^r(H): one vertex per edge of H, one edge per r pairwise disjoint edges.

    The r-sets are grown as cliques of the disjointness graph, each extension
    restricted to later, still-compatible edges.
    """
    if r < 2:
        raise InputError("kneser_power needs r >= 2", "r")
    masks = list(h.edges)
    disjoint = disjointness_table(masks)
    found: list[int] = []

    def grow(chosen: int, candidates: int, size: int) -> None:
        if size == r:
            found.append(chosen)
            return
        while candidates:
            low = candidates & -candidates
            i = low.bit_length() - 1
            candidates ^= low
            # only indices above i keep the r-set sorted
            grow(chosen | low, candidates & disjoint[i] & ~((low << 1) - 1), size + 1)

    grow(0, (1 << len(masks)) - 1, 0)
    return KneserPower(Hypergraph(len(masks), tuple(found)), tuple(masks))


def theorem1_lower_bound(n_vertices: int, alt: int, r: int) -> int:
    """ceil((|V(H)| - alt_r(H)) / (r - 1)), the chromatic lower bound for KG^r(H)."""
    if r < 2:
        raise InputError("the Kneser lower bound needs r >= 2", "r")
    if not 0 <= alt <= n_vertices:
        raise InputError(f"need 0 <= alt <= |V|, got alt={alt}, |V|={n_vertices}", "alt")
    return -(-(n_vertices - alt) // (r - 1))
