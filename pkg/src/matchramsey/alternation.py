"""Signed vectors over Z_p plus zero, their alternation, and alt_p(H).

A signed vector is a tuple of exponents: 0 is the zero symbol and
j in 1..p stands for omega^j (so p encodes the group identity).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import Budget, BudgetExceeded, InputError, tick
from .hypergraph import Hypergraph

DEFAULT_MAX_VERTICES = 9


@dataclass(frozen=True)
class SignedVector:
    p: int
    x: tuple[int, ...]

    def __post_init__(self):
        if self.p < 2:
            raise InputError("group order p must be at least 2", "p")
        object.__setattr__(self, "x", tuple(self.x))
        for v in self.x:
            if not isinstance(v, int) or not 0 <= v <= self.p:
                raise InputError(f"entry {v!r} outside 0..{self.p}", "x")

    @classmethod
    def from_json(cls, data: dict) -> "SignedVector":
        try:
            return cls(int(data["p"]), tuple(data["x"]))
        except (KeyError, TypeError, ValueError):
            raise InputError('signed vector JSON needs integer "p" and list "x"', "x") from None

    def to_json(self) -> dict:
        return {"p": self.p, "x": list(self.x)}

    @property
    def n(self) -> int:
        return len(self.x)

    def part(self, j: int) -> frozenset[int]:
        """X^(omega^j): the 1-based positions holding omega^j."""
        return frozenset(i + 1 for i, v in enumerate(self.x) if v == j)

    def alt(self) -> int:
        return alt_of_vector(self.x)


def alt_of_vector(x: Sequence[int]) -> int:
    """Length of the longest alternating subsequence of the nonzero entries.

    Equals the number of maximal runs of equal values once zeros are dropped.
    """
    runs = 0
    last = 0
    for v in x:
        if v and v != last:
            runs += 1
            last = v
    return runs


def check_ordering(h: Hypergraph, sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if len(sigma) != h.n or sorted(sigma) != list(range(1, h.n + 1)):
        raise InputError(f"ordering must be a permutation of 1..{h.n}", "sigma")
    return sigma


def _edges_through(h: Hypergraph) -> list[list[int]]:
    through: list[list[int]] = [[] for _ in range(h.n)]
    for e in h.edges:
        for v in range(h.n):
            if e >> v & 1:
                through[v].append(e)
    return through


def _best_alt(
    sigma: Sequence[int],
    p: int,
    through: list[list[int]],
    target: int | None = None,
    budget: Budget | None = None,
) -> tuple[int, tuple[int, ...]]:
    """Max alt(X) over admissible X on the positions of ``sigma``.

    Only vectors whose consecutive nonzero entries differ are visited: zeroing
    a repeated entry keeps alt and can only shrink the classes.  Values are
    introduced in order (a fresh value is one above the largest so far), as
    any relabelling of Z_p preserves both alt and admissibility.  Stops early
    once ``target`` is reached.
    """
    k = len(sigma)
    bits = [1 << (s - 1) for s in sigma]
    classes = [0] * (p + 1)
    x = [0] * k
    best = -1
    best_x: tuple[int, ...] = ()

    def dfs(i: int, last: int, count: int, top: int) -> bool:
        nonlocal best, best_x
        if count + (k - i) <= best:
            return False
        if i == k:
            best = count
            best_x = tuple(x)
            return target is not None and best >= target
        tick(budget, "alternation")
        b = bits[i]
        for v in range(1, min(top + 1, p) + 1):
            if v == last:
                continue
            cm = classes[v] | b
            if any(e & ~cm == 0 for e in through[i]):
                continue
            classes[v] = cm
            x[i] = v
            stop = dfs(i + 1, v, count + 1, max(top, v))
            classes[v] = cm ^ b
            x[i] = 0
            if stop:
                return True
        return dfs(i + 1, last, count, top)

    dfs(0, 0, 0, 0)
    return best, best_x


def _position_edges(h: Hypergraph, sigma: Sequence[int]) -> list[list[int]]:
    """Edges through sigma(i), indexed by position i (in vertex-mask terms)."""
    through = _edges_through(h)
    return [through[s - 1] for s in sigma]


def alt_with_ordering_witness(
    h: Hypergraph, p: int, sigma: Sequence[int], budget: Budget | None = None
) -> tuple[int, SignedVector]:
    """alt_p(H, sigma) together with a vector attaining it (position-indexed)."""
    if p < 2:
        raise InputError("group order p must be at least 2", "p")
    sigma = check_ordering(h, sigma)
    value, x = _best_alt(sigma, p, _position_edges(h, sigma), budget=budget)
    return value, SignedVector(p, x)


def alt_with_ordering(h: Hypergraph, p: int, sigma: Sequence[int], budget: Budget | None = None) -> int:
    return alt_with_ordering_witness(h, p, sigma, budget)[0]


def admissible(h: Hypergraph, sigma: Sequence[int], x: Sequence[int]) -> bool:
    """No class sigma(X^eps) contains an edge of ``h``."""
    classes: dict[int, int] = {}
    for pos, v in enumerate(x):
        if v:
            classes[v] = classes.get(v, 0) | 1 << (sigma[pos] - 1)
    return not any(e & ~c == 0 for c in classes.values() for e in h.edges)


def twin_classes(h: Hypergraph) -> list[int]:
    """Class id per vertex; u and v share a class iff swapping them fixes E(H)."""
    edges = set(h.edges)
    cls = list(range(h.n))
    for u in range(h.n):
        if cls[u] != u:
            continue
        for v in range(u + 1, h.n):
            if cls[v] != v:
                continue
            bu, bv = 1 << u, 1 << v
            swapped = set()
            for e in edges:
                a, b = e & bu, e & bv
                if bool(a) != bool(b):
                    e ^= bu | bv
                swapped.add(e)
            if swapped == edges:
                cls[v] = u
    return cls


@dataclass(frozen=True)
class AlternationResult:
    value: int
    sigma: tuple[int, ...]
    witness: SignedVector
    orderings_examined: int

    def to_json(self) -> dict:
        return {
            "alt": self.value,
            "sigma": list(self.sigma),
            "witness": self.witness.to_json(),
            "orderings_examined": self.orderings_examined,
        }


def alternation_number_result(
    h: Hypergraph,
    p: int,
    budget: Budget | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> AlternationResult:
    """Exact alt_p(H): minimum of alt_p(H, sigma) over all orderings.

    Orderings are built position by position.  The best alternation already
    available on a prefix is a lower bound for every completion, so a prefix
    reaching the incumbent is cut.  Twin vertices (whose transposition fixes
    E(H)) are placed in increasing order only.
    """
    if p < 2:
        raise InputError("group order p must be at least 2", "p")
    n = h.n
    if n > max_vertices:
        raise BudgetExceeded(f"alternation number: n={n} exceeds exact budget n <= {max_vertices}",
                             {"lower": 0, "upper": n})
    through = _edges_through(h)
    twins = twin_classes(h)
    identity = tuple(range(1, n + 1))
    best, best_x = _best_alt(identity, p, [through[s - 1] for s in identity], budget=budget)
    best_sigma = identity
    examined = 1
    if best == 0:
        return AlternationResult(0, identity, SignedVector(p, best_x), examined)

    prefix: list[int] = []
    placed = [False] * n
    prefix_alt = [0]

    def extend() -> None:
        nonlocal best, best_x, best_sigma, examined
        depth = len(prefix)
        if depth == n:
            examined += 1
            value, x = _best_alt(prefix, p, [through[s - 1] for s in prefix], budget=budget)
            if value < best:
                best, best_x, best_sigma = value, x, tuple(prefix)
            return
        for v in range(n):
            if placed[v]:
                continue
            # twin classes appear in increasing vertex order
            if any(not placed[u] and twins[u] == twins[v] for u in range(v)):
                continue
            tick(budget, "alternation number")
            prefix.append(v + 1)
            placed[v] = True
            # alt of the longer prefix is either equal or one more
            lower, _ = _best_alt(prefix, p, [through[s - 1] for s in prefix],
                                 target=prefix_alt[-1] + 1)
            if lower < best:
                prefix_alt.append(lower)
                extend()
                prefix_alt.pop()
            placed[v] = False
            prefix.pop()

    try:
        extend()
    except BudgetExceeded as exc:
        raise BudgetExceeded(str(exc), {"lower": 0, "upper": best}) from None
    return AlternationResult(best, best_sigma, SignedVector(p, best_x), examined)


def alternation_number(h: Hypergraph, p: int, budget: Budget | None = None,
                       max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    return alternation_number_result(h, p, budget, max_vertices).value


def all_vectors(n: int, p: int) -> Iterable[tuple[int, ...]]:
    return product(range(p + 1), repeat=n)
