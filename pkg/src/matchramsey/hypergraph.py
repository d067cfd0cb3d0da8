"""Hypergraphs on vertices 1..n with edges stored as bitmasks.

Bit ``i - 1`` of an edge mask stands for vertex ``i``.  Edges are kept as a
sorted tuple of distinct masks, so two equal hypergraphs always have equal
encodings and every derived table (edge indices, Kneser vertices, colorings)
is reproducible run to run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import Budget, BudgetExceeded, InputError, tick

INFINITY = math.inf


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> list[int]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be nonnegative", "n")
        full = (1 << self.n) - 1
        for e in self.edges:
            if e <= 0:
                raise InputError("edges must be nonempty", "edges")
            if e & ~full:
                raise InputError(f"edge {vertices_of(e)} leaves [1..{self.n}]", "edges")
        canon = tuple(sorted(set(self.edges)))
        if canon != self.edges:
            object.__setattr__(self, "edges", canon)

    @classmethod
    def from_lists(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        masks = []
        for e in edges:
            e = list(e)
            if not e:
                raise InputError("edges must be nonempty", "edges")
            for v in e:
                if not isinstance(v, int) or not 1 <= v <= n:
                    raise InputError(f"vertex {v!r} outside [1..{n}]", "edges")
            masks.append(mask_of(e))
        return cls(n, tuple(masks))

    @classmethod
    def from_json(cls, data: dict) -> "Hypergraph":
        try:
            n = data["n"]
            edges = data["edges"]
        except (KeyError, TypeError):
            raise InputError('hypergraph JSON needs "n" and "edges"', "hypergraph") from None
        if not isinstance(n, int) or isinstance(n, bool):
            raise InputError('"n" must be an integer', "n")
        return cls.from_lists(n, edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": self.edge_lists()}

    def edge_lists(self) -> list[list[int]]:
        return [vertices_of(e) for e in self.edges]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __len__(self) -> int:
        return len(self.edges)

    def has_singleton(self) -> bool:
        return any(e & (e - 1) == 0 for e in self.edges)


def complete_uniform(n: int, k: int) -> Hypergraph:
    """K_n^k: all k-subsets of [n]."""
    if k < 1 or k > n:
        raise InputError(f"complete_uniform needs 1 <= k <= n, got n={n}, k={k}", "k")
    return Hypergraph(n, tuple(mask_of(c) for c in combinations(range(1, n + 1), k)))


def induced(h: Hypergraph, vertex_set: Iterable[int] | int) -> Hypergraph:
    """Edges of ``h`` lying inside ``vertex_set``; the vertex labels are kept."""
    s = vertex_set if isinstance(vertex_set, int) else mask_of(vertex_set)
    if s & ~h.full_mask:
        raise InputError("induced: vertex set leaves [1..n]", "S")
    return Hypergraph(h.n, tuple(e for e in h.edges if e & ~s == 0))


# --- matchings -------------------------------------------------------------


def disjointness_table(masks: Sequence[int]) -> list[int]:
    """For each edge index i, the bitset of indices j whose edges miss edge i."""
    table = []
    for a in masks:
        bits = 0
        for j, b in enumerate(masks):
            if a & b == 0:
                bits |= 1 << j
        table.append(bits)
    return table


def has_matching_in(candidates: int, size: int, disjoint: Sequence[int]) -> bool:
    """Is there a set of ``size`` pairwise disjoint edges among ``candidates``?

    ``candidates`` is a bitset over edge indices and ``disjoint`` the table
    from :func:`disjointness_table`.  Stops at the first witness.
    """
    if size <= 0:
        return True
    if candidates == 0:
        return False
    if size == 1:
        return True
    if popcount(candidates) < size:
        return False
    while candidates:
        low = candidates & -candidates
        i = low.bit_length() - 1
        candidates ^= low
        if has_matching_in(candidates & disjoint[i], size - 1, disjoint):
            return True
        if popcount(candidates) < size:
            return False
    return False


def maximum_matching(h: Hypergraph) -> list[int]:
    """A maximum matching of ``h`` as a list of edge masks.

    Branch and bound over edges sorted by lowest vertex; a branch is cut when
    the matched count plus the number of still-compatible edges cannot beat
    the incumbent.
    """
    masks = sorted(h.edges, key=lambda e: (e & -e, e))
    if not masks:
        return []
    min_size = min(popcount(e) for e in masks)
    cover = 0
    for e in masks:
        cover |= e
    ceiling = min(len(masks), popcount(cover) // min_size)
    best: list[int] = []
    current: list[int] = []

    def grow(pos: int, used: int) -> bool:
        nonlocal best
        if len(current) > len(best):
            best = list(current)
            if len(best) >= ceiling:
                return True
        rest = [e for e in masks[pos:] if e & used == 0]
        if len(current) + len(rest) <= len(best):
            return False
        for j in range(pos, len(masks)):
            e = masks[j]
            if e & used:
                continue
            current.append(e)
            done = grow(j + 1, used | e)
            current.pop()
            if done:
                return True
        return False

    grow(0, 0)
    return best


def matching_number(h: Hypergraph) -> int:
    """nu(H): the size of a largest set of pairwise disjoint edges."""
    return len(maximum_matching(h))


def has_matching_of_size(h: Hypergraph, m: int) -> bool:
    if m < 0:
        raise InputError("matching size must be nonnegative", "m")
    if m == 0:
        return True
    masks = list(h.edges)
    return has_matching_in((1 << len(masks)) - 1, m, disjointness_table(masks))


# --- weak chromatic number -------------------------------------------------


@dataclass(frozen=True)
class ChromaticResult:
    value: float | int
    coloring: tuple[int, ...] | None  # color of vertex i at index i - 1; colors 1..value

    def to_json(self) -> dict:
        value = "infinity" if self.value == INFINITY else self.value
        return {"chi": value, "coloring": None if self.coloring is None else list(self.coloring)}


def is_proper_coloring(h: Hypergraph, coloring: Sequence[int]) -> bool:
    """No edge of size >= 2 is monochromatic (and no singleton edges exist)."""
    if len(coloring) != h.n:
        return False
    for e in h.edges:
        colors = {coloring[v - 1] for v in vertices_of(e)}
        if len(colors) < 2:
            return False
    return True


def color_with(h: Hypergraph, k: int, budget: Budget | None = None) -> tuple[int, ...] | None:
    """A proper coloring of ``h`` with colors 1..k, or None if none exists.

    Vertices are colored in index order; vertex v may only take a color at
    most one above the largest color used so far.  An edge is checked when
    its highest vertex gets colored.
    """
    if h.has_singleton():
        return None
    n = h.n
    if n == 0:
        return ()
    if k <= 0:
        return None
    closing: list[list[int]] = [[] for _ in range(n)]
    for e in h.edges:
        closing[e.bit_length() - 1].append(e)
    colors = [0] * n
    # class_mask[c]: vertices currently colored c
    class_mask = [0] * (k + 1)

    def dfs(v: int, used: int) -> bool:
        if v == n:
            return True
        tick(budget, "chromatic number")
        bit = 1 << v
        for c in range(1, min(used + 1, k) + 1):
            cm = class_mask[c] | bit
            if any(e & ~cm == 0 for e in closing[v]):
                continue
            class_mask[c] = cm
            colors[v] = c
            if dfs(v + 1, max(used, c)):
                return True
            class_mask[c] = cm ^ bit
        colors[v] = 0
        return False

    if dfs(0, 0):
        return tuple(colors)
    return None


def chromatic_number(h: Hypergraph, budget: Budget | None = None) -> ChromaticResult:
    """Exact weak chromatic number with a witness coloring.

    INFINITY when ``h`` has a singleton edge.  The returned value k comes
    with ``color_with(h, k - 1) is None`` established by the search itself.
    """
    if h.has_singleton():
        return ChromaticResult(INFINITY, None)
    if h.n == 0:
        return ChromaticResult(0, ())
    k = 2 if h.edges else 1
    while True:
        try:
            coloring = color_with(h, k, budget)
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), {"lower": k, "upper": h.n}) from None
        if coloring is not None:
            return ChromaticResult(k, coloring)
        k += 1
