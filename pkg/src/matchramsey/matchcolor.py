"""Color-frequency mappings, matching colorings and the tau-matching chromatic number.

A coloring of the edges of H with palette A is an (A, tau)-matching coloring
when no color a has tau(a) + 1 pairwise disjoint edges.  The least palette
size admitting one is chi_M(tau, H).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import Budget, BudgetExceeded, ConsistencyError, InputError, tick
from .hypergraph import (
    INFINITY,
    Hypergraph,
    complete_uniform,
    disjointness_table,
    has_matching_in,
    mask_of,
)


@dataclass(frozen=True)
class ColorFrequencyMap:
    """tau: N -> {0, ..., r - 1}, given by a finite table and a default value."""

    r: int
    default: int = 0
    table: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.r < 1:
            raise InputError("frequency bound r must be positive", "r")
        table = {}
        for key, value in dict(self.table).items():
            try:
                color = int(key)
            except (TypeError, ValueError):
                raise InputError(f"color id {key!r} is not an integer", "table") from None
            if color < 1:
                raise InputError(f"color id {color} must be positive", "table")
            table[color] = value
        for value in [self.default, *table.values()]:
            if not isinstance(value, int) or not 0 <= value <= self.r - 1:
                raise InputError(f"tau value {value!r} outside 0..{self.r - 1}", "table")
        object.__setattr__(self, "table", dict(sorted(table.items())))

    @classmethod
    def constant(cls, r: int, value: int) -> "ColorFrequencyMap":
        return cls(r, value)

    @classmethod
    def from_json(cls, data: dict) -> "ColorFrequencyMap":
        try:
            return cls(int(data["r"]), data.get("default", 0), data.get("table", {}))
        except (KeyError, TypeError, AttributeError):
            raise InputError('tau JSON needs "r" (and optional "default", "table")', "tau") from None

    def to_json(self) -> dict:
        return {"r": self.r, "default": self.default,
                "table": {str(k): v for k, v in self.table.items()}}

    def __call__(self, color: int) -> int:
        return self.table.get(color, self.default)

    def takes_value(self, value: int) -> bool:
        return value == self.default or value in self.table.values()

    def free_ids(self, exclude=()):
        """Color ids mapped to the default value, in increasing order."""
        color = 1
        while True:
            if color not in self.table and color not in exclude:
                yield color
            color += 1

    def best_palette(self, size: int) -> list[int]:
        """``size`` color ids with the largest tau values (ties: smaller id first).

        Any other palette of that size is dominated value by value, so it is
        the only one worth testing for feasibility.
        """
        pool = sorted(self.table.items(), key=lambda kv: (-kv[1], kv[0]))
        defaults = self.free_ids()
        out: list[int] = []
        for color, value in pool:
            if len(out) == size or value < self.default:
                break
            out.append(color)
        while len(out) < size:
            out.append(next(defaults))
        return out

    def positive_supply(self) -> float:
        """How many colors with a positive value exist (INFINITY if the default is positive)."""
        if self.default > 0:
            return INFINITY
        return sum(1 for v in self.table.values() if v > 0)


@dataclass(frozen=True)
class EdgeColoring:
    target: Hypergraph
    colors: tuple[int, ...]  # aligned with target.edges

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if len(self.colors) != len(self.target.edges):
            raise InputError(
                f"coloring has {len(self.colors)} entries for {len(self.target.edges)} edges", "colors")

    @property
    def palette(self) -> frozenset[int]:
        return frozenset(self.colors)

    def class_of(self, color: int) -> Hypergraph:
        return Hypergraph(self.target.n, tuple(e for e, c in zip(self.target.edges, self.colors) if c == color))

    @classmethod
    def from_json(cls, data: dict, target: Hypergraph) -> "EdgeColoring":
        try:
            colors = data["colors"]
        except (KeyError, TypeError):
            raise InputError('edge coloring JSON needs "colors"', "colors") from None
        return cls(target, tuple(int(c) for c in colors))

    def to_json(self) -> dict:
        return {"colors": list(self.colors)}


@dataclass(frozen=True)
class Partition:
    ground: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for block in self.blocks:
            if seen & block:
                raise InputError("partition blocks overlap", "blocks")
            seen |= block
        if seen != set(range(1, self.ground + 1)):
            raise InputError(f"partition blocks must cover exactly 1..{self.ground}", "blocks")

    def to_json(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]


def first_block_coloring(h: Hypergraph, partition: Partition, ids: Sequence[int]) -> EdgeColoring:
    """Color each edge by ``ids[i]`` for the first block S_i it meets."""
    block_masks = [mask_of(b) for b in partition.blocks]
    colors = []
    for e in h.edges:
        i = next(i for i, b in enumerate(block_masks) if e & b)
        colors.append(ids[i])
    return EdgeColoring(h, tuple(colors))


def is_matching_coloring(c: EdgeColoring, tau: ColorFrequencyMap) -> bool:
    """No color a has a monochromatic (tau(a) + 1)-matching."""
    masks = list(c.target.edges)
    disjoint = disjointness_table(masks)
    members: dict[int, int] = {}
    for i, color in enumerate(c.colors):
        members[color] = members.get(color, 0) | 1 << i
    return not any(has_matching_in(bits, tau(color) + 1, disjoint) for color, bits in members.items())


def color_edges_with_caps(
    h: Hypergraph, caps: Sequence[int], budget: Budget | None = None
) -> list[int] | None:
    """Assign each edge a slot 0..len(caps)-1 so slot j has no (caps[j]+1)-matching.

    Depth-first over edges in canonical order.  Adding edge e to slot j is
    refused when the slot already holds caps[j] disjoint edges avoiding e.
    Slots with equal caps are interchangeable, so a slot is opened only after
    every earlier slot with the same cap is in use.
    """
    masks = list(h.edges)
    if not masks:
        return []
    disjoint = disjointness_table(masks)
    q = len(caps)
    caps = list(caps)
    # twin[j]: nearest earlier slot with the same cap, which must be opened first
    twin = [max((i for i in range(j) if caps[i] == caps[j]), default=-1) for j in range(q)]
    members = [0] * q
    assignment = [-1] * len(masks)

    def dfs(i: int) -> bool:
        if i == len(masks):
            return True
        tick(budget, "matching coloring")
        bit = 1 << i
        for j in range(q):
            if caps[j] <= 0:
                continue
            if members[j] == 0 and twin[j] >= 0 and members[twin[j]] == 0:
                continue
            if has_matching_in(members[j] & disjoint[i], caps[j], disjoint):
                continue
            members[j] |= bit
            assignment[i] = j
            if dfs(i + 1):
                return True
            members[j] ^= bit
        assignment[i] = -1
        return False

    return assignment if dfs(0) else None


@dataclass(frozen=True)
class MatchingChromaticResult:
    value: float | int
    coloring: EdgeColoring | None

    def to_json(self) -> dict:
        return {
            "chi_m": "infinity" if self.value == INFINITY else self.value,
            "coloring": None if self.coloring is None else self.coloring.to_json(),
        }


def matching_chromatic_number(
    h: Hypergraph, tau: ColorFrequencyMap, budget: Budget | None = None
) -> MatchingChromaticResult:
    """Exact chi_M(tau, H) with a witness coloring.

    Palette sizes are tried in increasing order, each with the dominant
    palette of that size (largest tau values).  When the size reaches the
    supply of positive-valued colors without success the answer is INFINITY.
    """
    if not h.edges:
        return MatchingChromaticResult(0, EdgeColoring(h, ()))
    supply = tau.positive_supply()
    size = 1
    while size <= supply:
        ids = tau.best_palette(size)
        try:
            slots = color_edges_with_caps(h, [tau(a) for a in ids], budget)
        except BudgetExceeded as exc:
            upper = len(h.edges) if supply >= len(h.edges) else None
            raise BudgetExceeded(str(exc), {"lower": size, "upper": upper}) from None
        if slots is not None:
            return MatchingChromaticResult(size, EdgeColoring(h, tuple(ids[j] for j in slots)))
        size += 1
    return MatchingChromaticResult(INFINITY, None)


def theorem3_lower_bound(
    n_vertices: int, alt: int, tau: ColorFrequencyMap, require_nonempty: bool = False
) -> float | int:
    """min |A| with sum of tau over A at least |V| - alt (INFINITY if unreachable).

    Greedy on the largest values is exact: table values count once each and
    the default may be repeated.
    """
    if not 0 <= alt <= n_vertices:
        raise InputError(f"need 0 <= alt <= |V|, got alt={alt}, |V|={n_vertices}", "alt")
    need = n_vertices - alt
    if need <= 0:
        return 1 if require_nonempty else 0
    total = 0
    count = 0
    for value in sorted(tau.table.values(), reverse=True):
        if value <= tau.default:
            break
        total += value
        count += 1
        if total >= need:
            return count
    if tau.default == 0:
        return INFINITY
    return count + -(-(need - total) // tau.default)


def proposition5_palette(
    n: int, k: int, r: int, tau: ColorFrequencyMap, palette: Sequence[int]
) -> tuple[list[int], Partition]:
    """The substituted palette B and the partition S_1..S_t behind the upper bound."""
    if r < 2:
        raise InputError("need r >= 2", "r")
    if not 1 <= k <= n:
        raise InputError(f"need n >= k >= 1, got n={n}, k={k}", "n")
    slack = n - r * (k - 1)
    if slack < 0:
        raise InputError(f"need n - r(k-1) >= 0, got {slack}", "n")
    if not tau.takes_value(r - 1):
        raise InputError(f"tau never takes the value r-1 = {r - 1}", "tau")
    if not palette:
        raise InputError("palette must be nonempty", "A")
    if len(set(palette)) != len(palette):
        raise InputError("palette has repeated color ids", "A")
    total = sum(tau(a) for a in palette)
    if total < slack:
        raise InputError(f"need sum of tau over A >= n - r(k-1): {total} < {slack}", "A")
    ids = sorted(palette, key=lambda a: (tau(a), a))
    if tau(ids[-1]) != r - 1:
        rest = set(ids[:-1])
        x = next((a for a, v in tau.table.items() if v == r - 1 and a not in rest), None)
        if x is None:
            x = next(tau.free_ids(exclude=rest))
        ids[-1] = x
    blocks: list[frozenset[int]] = []
    nxt = 1
    for b in ids[:-1]:
        take = min(tau(b), n + 1 - nxt)
        blocks.append(frozenset(range(nxt, nxt + take)))
        nxt += take
    last = frozenset(range(nxt, n + 1))
    if len(last) > r * k - 1:
        raise ConsistencyError(f"last block has {len(last)} > rk-1 = {r * k - 1} vertices")
    blocks.append(last)
    return ids, Partition(n, tuple(blocks))


def proposition5_coloring(
    n: int, k: int, r: int, tau: ColorFrequencyMap, palette: Sequence[int]
) -> EdgeColoring:
    """Coloring of K_n^k by the first block each edge meets, valid for palette B."""
    ids, partition = proposition5_palette(n, k, r, tau, palette)
    coloring = first_block_coloring(complete_uniform(n, k), partition, ids)
    if not is_matching_coloring(coloring, tau):
        raise ConsistencyError("first-block coloring is not a matching coloring")
    return coloring


def corollary5_value(n: int, k: int, r: int, tau: ColorFrequencyMap, nonempty: bool = False) -> float | int:
    """Closed-form chi_M(tau, K_n^k).

    ``nonempty=False`` is the n >= rk case (empty palettes allowed);
    ``nonempty=True`` is the n >= k, n >= r(k-1) case with A nonempty.
    """
    if r < 2:
        raise InputError("need r >= 2", "r")
    if not tau.takes_value(r - 1):
        raise InputError(f"tau never takes the value r-1 = {r - 1}", "tau")
    if nonempty:
        if not (1 <= k <= n and n - r * (k - 1) >= 0):
            raise InputError(f"need n >= k and n >= r(k-1), got n={n}, k={k}, r={r}", "n")
    elif not (k >= 1 and n >= r * k):
        raise InputError(f"need n >= rk, got n={n}, rk={r * k}", "n")
    return theorem3_lower_bound(n, r * (k - 1), tau, require_nonempty=nonempty)
