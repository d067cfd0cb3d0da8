"""Z_p-equivariant labellings of signed vectors and the generalized Tucker conditions.

A labelling lambda sends every nonzero X in (Z_p + {0})^n to a pair
(l1, l2): a group element (as an exponent 1..p) and a level in 1..m.  The
hypotheses checked here are

* equivariance: l1(w^j X) = w^j l1(X) and l2(w^j X) = l2(X);
* for each level i, every chain X_1 < ... < X_l inside level i shows at
  most gamma_i distinct l1 values;

under which the sum of the gammas is at least n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Mapping, Sequence

from .alternation import DEFAULT_MAX_VERTICES, SignedVector, alt_of_vector, alt_with_ordering, alternation_number, check_ordering
from .errors import Budget, ConsistencyError, InputError, tick
from .hypergraph import Hypergraph, popcount
from .matchcolor import ColorFrequencyMap, EdgeColoring, is_matching_coloring
from .ramsey import is_prime

Vector = tuple[int, ...]


def rotate(x: Sequence[int], j: int, p: int) -> Vector:
    """w^j X: zeros stay, exponent e becomes ((e + j - 1) mod p) + 1."""
    return tuple(((e + j - 1) % p) + 1 if e else 0 for e in x)


def multiply(x: SignedVector, j: int) -> SignedVector:
    if not 1 <= j <= x.p:
        raise InputError(f"exponent {j} outside 1..{x.p}", "j")
    return SignedVector(x.p, rotate(x.x, j, x.p))


def is_subvector(x1: Sequence[int], x2: Sequence[int]) -> bool:
    return all(a == 0 or a == b for a, b in zip(x1, x2))


def subset_relation(x1: SignedVector, x2: SignedVector) -> bool:
    """X1 < X2: every nonzero entry of X1 reappears in X2 (reflexive)."""
    if x1.p != x2.p or x1.n != x2.n:
        raise InputError("signed vectors differ in length or group order", "x")
    return is_subvector(x1.x, x2.x)


def nonzero_vectors(n: int, p: int) -> list[Vector]:
    return [x for x in product(range(p + 1), repeat=n) if any(x)]


def first_nonzero(x: Sequence[int]) -> int:
    return next(v for v in x if v)


def support(x: Sequence[int]) -> int:
    s = 0
    for i, v in enumerate(x):
        if v:
            s |= 1 << i
    return s


@dataclass(frozen=True)
class LambdaMap:
    n: int
    p: int
    m: int
    gamma: tuple[int, ...]
    table: Mapping[Vector, tuple[int, int]] = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(self.gamma))
        if self.p < 2:
            raise InputError("group order p must be at least 2", "p")
        if len(self.gamma) != self.m:
            raise InputError(f"gamma has {len(self.gamma)} entries, expected m={self.m}", "gamma")
        for g in self.gamma:
            if not 1 <= g <= self.p - 1:
                raise InputError(f"gamma entry {g} outside 1..{self.p - 1}", "gamma")
        expected = (self.p + 1) ** self.n - 1
        if len(self.table) != expected:
            raise InputError(f"table has {len(self.table)} entries, expected {expected}", "entries")
        for x, (l1, l2) in self.table.items():
            if len(x) != self.n or not any(x) or any(not 0 <= v <= self.p for v in x):
                raise InputError(f"bad vector {list(x)}", "entries")
            if not 1 <= l1 <= self.p or not 1 <= l2 <= self.m:
                raise InputError(f"label {(l1, l2)} out of range at {list(x)}", "entries")

    def __call__(self, x: Sequence[int]) -> tuple[int, int]:
        return self.table[tuple(x)]

    def level(self, i: int) -> dict[Vector, int]:
        """Vectors with l2 = i, mapped to their l1."""
        return {x: l1 for x, (l1, l2) in self.table.items() if l2 == i}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "m": self.m,
            "gamma": list(self.gamma),
            "entries": [{"x": list(x), "l1": l1, "l2": l2} for x, (l1, l2) in sorted(self.table.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LambdaMap":
        try:
            table = {tuple(int(v) for v in e["x"]): (int(e["l1"]), int(e["l2"])) for e in data["entries"]}
            return cls(int(data["n"]), int(data["p"]), int(data["m"]), tuple(data["gamma"]), table)
        except (KeyError, TypeError, ValueError):
            raise InputError('lambda JSON needs "n", "p", "m", "gamma" and "entries"', "entries") from None


def equivariance_violation(lam: LambdaMap) -> tuple[Vector, int] | None:
    """First (X, j) with lambda(w^j X) != (w^j l1(X), l2(X)), or None."""
    for x in sorted(lam.table):
        l1, l2 = lam.table[x]
        for j in range(1, lam.p + 1):
            if lam.table[rotate(x, j, lam.p)] != (((l1 + j - 1) % lam.p) + 1, l2):
                return x, j
    return None


def check_equivariance(lam: LambdaMap) -> bool:
    return equivariance_violation(lam) is None


def _chain_masks(x: Vector, l1: int, reach: Mapping[Vector, dict]) -> dict[int, tuple[Vector, int] | None]:
    """l1-bitmasks of chains ending at ``x``, given those of its labelled subvectors."""
    bit = 1 << (l1 - 1)
    masks: dict[int, tuple[Vector, int] | None] = {bit: None}
    supp = support(x)
    sub = (supp - 1) & supp
    while sub:
        y = tuple(v if sub >> i & 1 else 0 for i, v in enumerate(x))
        for mask in reach.get(y, ()):
            masks.setdefault(mask | bit, (y, mask))
        sub = (sub - 1) & supp
    return masks


def longest_distinct_chain(level: Mapping[Vector, int]) -> tuple[int, list[Vector]]:
    """Max number of distinct l1 values along a chain inside one level.

    Dynamic programming over the subvector order: for each vector, the set
    of l1-bitmasks realised by chains ending there, with a back pointer per
    mask.  Vectors are processed by increasing support size, so all proper
    subvectors are done first.
    """
    if not level:
        return 0, []
    reach: dict[Vector, dict[int, tuple[Vector, int] | None]] = {}
    best, best_end = 0, None
    for x in sorted(level, key=lambda v: (popcount(support(v)), v)):
        reach[x] = _chain_masks(x, level[x], reach)
        for mask in reach[x]:
            if popcount(mask) > best:
                best, best_end = popcount(mask), (x, mask)
    chain = []
    node = best_end
    while node is not None:
        chain.append(node[0])
        node = reach[node[0]][node[1]]
    return best, chain[::-1]


def max_distinct_lambda1_on_chains(lam: LambdaMap, i: int) -> int:
    if not 1 <= i <= lam.m:
        raise InputError(f"level {i} outside 1..{lam.m}", "i")
    return longest_distinct_chain(lam.level(i))[0]


@dataclass
class HypothesisReport:
    equivariant: bool
    equivariance_witness: tuple[Vector, int] | None
    levels: list[dict]
    sum_gamma: int
    n: int

    @property
    def chains_ok(self) -> bool:
        return all(level["ok"] for level in self.levels)

    @property
    def hypotheses_hold(self) -> bool:
        return self.equivariant and self.chains_ok

    @property
    def conclusion_holds(self) -> bool:
        return self.sum_gamma >= self.n

    def to_json(self) -> dict:
        witness = None
        if self.equivariance_witness is not None:
            witness = {"x": list(self.equivariance_witness[0]), "j": self.equivariance_witness[1]}
        return {
            "equivariant": self.equivariant,
            "equivariance_witness": witness,
            "levels": self.levels,
            "hypotheses_hold": self.hypotheses_hold,
            "sum_gamma": self.sum_gamma,
            "n": self.n,
            "conclusion_holds": self.conclusion_holds,
        }


def check_hypotheses(lam: LambdaMap) -> HypothesisReport:
    witness = equivariance_violation(lam)
    levels = []
    for i in range(1, lam.m + 1):
        distinct, chain = longest_distinct_chain(lam.level(i))
        levels.append({
            "level": i,
            "gamma": lam.gamma[i - 1],
            "max_distinct": distinct,
            "ok": distinct <= lam.gamma[i - 1],
            "chain": [list(x) for x in chain],
        })
    return HypothesisReport(witness is None, witness, levels, sum(lam.gamma), lam.n)


def classical_gamma(alpha: int, m: int, p: int) -> tuple[int, ...]:
    """alpha ones followed by m - alpha copies of p - 1."""
    if not 0 <= alpha <= m:
        raise InputError(f"need 0 <= alpha <= m, got alpha={alpha}, m={m}", "alpha")
    return (1,) * alpha + (p - 1,) * (m - alpha)


# --- the labelling built from a matching coloring --------------------------


def colex_key(x: Sequence[int], eps: int) -> tuple:
    part = sum(1 << i for i, v in enumerate(x) if v == eps)
    return (part,)


def lex_key(x: Sequence[int], eps: int) -> tuple:
    return tuple(i for i, v in enumerate(x) if v == eps)


ORDERS: dict[str, Callable[[Sequence[int], int], tuple]] = {"colex": colex_key, "lex": lex_key}


@dataclass(frozen=True)
class ColoringLabelling:
    lam: LambdaMap
    sigma: tuple[int, ...]
    alt_sigma: int
    palette: tuple[int, ...]
    sigma_optimal: bool | None


def build_lambda_from_coloring(
    h: Hypergraph,
    sigma: Sequence[int],
    coloring: EdgeColoring,
    tau: ColorFrequencyMap,
    p: int,
    order: str = "colex",
    require_optimal: bool = False,
) -> ColoringLabelling:
    """The labelling that turns a matching coloring into a Tucker-type map.

    With a = alt_p(H, sigma) and palette a_1 < ... < a_t:

    * if alt(X) <= a: l1 = first nonzero entry, l2 = alt(X);
    * otherwise some class sigma(X^eps) contains an edge.  Let z be the
      largest j such that a class contains an a_j-colored edge; l2 = a + z
      and l1 = the eps whose class X^eps is largest under ``order`` among
      classes containing an a_z-colored edge.

    gamma is (1, ..., 1, tau(a_1), ..., tau(a_t)) with a ones.  The
    construction assumes sigma attains alt_p(H); ``sigma_optimal`` records
    whether it does, and ``require_optimal`` turns a miss into an error.
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime", "p")
    if coloring.target != h:
        raise InputError("coloring does not belong to this hypergraph", "colors")
    if not is_matching_coloring(coloring, tau):
        raise InputError("not a matching coloring for this tau", "colors")
    if order not in ORDERS:
        raise InputError(f"unknown subset order {order!r}", "order")
    sigma = check_ordering(h, sigma)
    palette = tuple(sorted(coloring.palette))
    for a in palette:
        if tau(a) > p - 1:
            raise InputError(f"tau({a}) = {tau(a)} exceeds p - 1 = {p - 1}", "tau")
    alt_sigma = alt_with_ordering(h, p, sigma)
    # optimality is reported whenever alt_p(H) is within the exact budget
    optimal = None
    if require_optimal or h.n <= DEFAULT_MAX_VERTICES:
        optimal = alt_sigma == alternation_number(h, p)
    if require_optimal and not optimal:
        raise InputError(f"ordering is not optimal: alt_p(H, sigma) = {alt_sigma} > alt_p(H)", "sigma")
    key = ORDERS[order]
    rank = {a: j for j, a in enumerate(palette, start=1)}
    # edges as position masks, with their palette rank
    position = {v: i for i, v in enumerate(sigma)}
    edges = []
    for e, c in zip(h.edges, coloring.colors):
        pm = 0
        for v in range(h.n):
            if e >> v & 1:
                pm |= 1 << position[v + 1]
        edges.append((pm, rank[c]))

    table: dict[Vector, tuple[int, int]] = {}
    for x in nonzero_vectors(h.n, p):
        a = alt_of_vector(x)
        if a <= alt_sigma:
            table[x] = (first_nonzero(x), a)
            continue
        parts = {}
        for i, v in enumerate(x):
            if v:
                parts[v] = parts.get(v, 0) | 1 << i
        top = 0
        holders: list[int] = []
        for eps, pm_class in parts.items():
            ranks = [j for pm, j in edges if pm & ~pm_class == 0]
            if not ranks:
                continue
            j = max(ranks)
            if j > top:
                top, holders = j, [eps]
            elif j == top:
                holders.append(eps)
        if top == 0:
            raise ConsistencyError(f"alt({list(x)}) > alt_p(H, sigma) but no class contains an edge")
        eps = max(holders, key=lambda e: key(x, e))
        table[x] = (eps, alt_sigma + top)

    gamma = (1,) * alt_sigma + tuple(tau(a) for a in palette)
    lam = LambdaMap(h.n, p, alt_sigma + len(palette), gamma, table)
    return ColoringLabelling(lam, sigma, alt_sigma, palette, optimal)


# --- hunting for counterexamples -------------------------------------------


def orbit_representatives(n: int, p: int) -> list[Vector]:
    """Lexicographically least vector of each orbit, by support size then lex."""
    reps = []
    for x in nonzero_vectors(n, p):
        if x == min(rotate(x, j, p) for j in range(1, p + 1)):
            reps.append(x)
    return sorted(reps, key=lambda x: (popcount(support(x)), x))


def search_counterexample(
    n: int, p: int, m: int, gamma: Sequence[int], budget: Budget | None = None
) -> LambdaMap | None:
    """An equivariant labelling meeting every chain condition although sum(gamma) < n.

    Labels are chosen on orbit representatives (smallest supports first) and
    spread over each orbit by the group action; a partial labelling is
    abandoned as soon as a chain among labelled vectors breaks its level's
    bound.  Levels with equal gamma are interchangeable, so a level is used
    only after every earlier level with the same gamma.  Returns the first
    complete labelling found in that order, or None.
    """
    gamma = tuple(gamma)
    if not is_prime(p):
        raise InputError(f"{p} is not prime", "p")
    if len(gamma) != m:
        raise InputError(f"gamma has {len(gamma)} entries, expected m={m}", "gamma")
    if any(not 1 <= g <= p - 1 for g in gamma):
        raise InputError(f"gamma entries must lie in 1..{p - 1}", "gamma")
    if sum(gamma) >= n:
        raise InputError(f"sum(gamma) = {sum(gamma)} >= n = {n}: nothing to refute", "gamma")
    reps = orbit_representatives(n, p)
    twin = [max((i for i in range(k) if gamma[i] == gamma[k]), default=-1) for k in range(m)]
    # per level: chain masks of every labelled vector.  Representatives come in
    # by support size, so a new vector never has a labelled strict superset and
    # only chains ending at it need checking.
    reach: list[dict[Vector, dict]] = [dict() for _ in range(m)]
    table: dict[Vector, tuple[int, int]] = {}

    def dfs(k: int) -> bool:
        if k == len(reps):
            return True
        tick(budget, "counterexample search")
        rep = reps[k]
        orbit = [rotate(rep, j, p) for j in range(1, p + 1)]
        for level in range(m):
            if not reach[level] and twin[level] >= 0 and not reach[twin[level]]:
                continue
            for l1 in range(1, p + 1):
                ok = True
                for j, y in enumerate(orbit, start=1):
                    value = ((l1 + j - 1) % p) + 1
                    masks = _chain_masks(y, value, reach[level])
                    reach[level][y] = masks
                    table[y] = (value, level + 1)
                    if max(popcount(mask) for mask in masks) > gamma[level]:
                        ok = False
                        break
                if ok and dfs(k + 1):
                    return True
                for y in orbit:
                    if y in table:
                        del reach[level][y]
                        del table[y]
        return False

    if dfs(0):
        return LambdaMap(n, p, m, gamma, dict(table))
    return None

