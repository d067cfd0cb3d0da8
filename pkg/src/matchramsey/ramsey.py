"""Hypergraph matching Ramsey numbers R_r(s_1, ..., s_t).

n arrows (s_1, ..., s_t) in uniformity r when every t-coloring of the edges
of K_n^r has, for some j, s_j disjoint edges of color j.  Equivalently, K_n^r
admits no ([t], tau)-matching coloring with tau(j) = s_j - 1, which is how
:func:`arrows` decides it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import Budget, BudgetExceeded, ConsistencyError, InputError
from .hypergraph import complete_uniform, has_matching_of_size
from .matchcolor import (
    ColorFrequencyMap,
    EdgeColoring,
    Partition,
    color_edges_with_caps,
    first_block_coloring,
    is_matching_coloring,
)


@dataclass(frozen=True)
class RamseyInstance:
    r: int
    s: tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise InputError("uniformity r must be positive", "r")
        s = tuple(sorted(self.s))
        if not s:
            raise InputError("need at least one matching size", "s")
        if s[0] < 1:
            raise InputError("matching sizes must be positive", "s")
        object.__setattr__(self, "s", s)

    @property
    def t(self) -> int:
        return len(self.s)

    def tau(self) -> ColorFrequencyMap:
        """Color j in 1..t may carry at most s_j - 1 disjoint edges; others none."""
        return ColorFrequencyMap(max(self.s), 0, {j + 1: sj - 1 for j, sj in enumerate(self.s)})

    def to_json(self) -> dict:
        return {"r": self.r, "s": list(self.s)}


def formula_value(inst: RamseyInstance) -> int:
    """1 + sum(s) + s_t (r - 1) - t."""
    return 1 + sum(inst.s) + inst.s[-1] * (inst.r - 1) - inst.t


def bad_partition(inst: RamseyInstance) -> Partition:
    """Blocks of sizes s_1 - 1, ..., s_{t-1} - 1 and s_t r - 1 covering [Lambda]."""
    sizes = [sj - 1 for sj in inst.s[:-1]] + [inst.s[-1] * inst.r - 1]
    blocks = []
    start = 1
    for size in sizes:
        blocks.append(frozenset(range(start, start + size)))
        start += size
    return Partition(start - 1, tuple(blocks))


def bad_coloring(inst: RamseyInstance) -> EdgeColoring:
    """The extremal coloring of K_Lambda^r, Lambda = formula_value - 1.

    Edge e gets the index of the first block it meets.  Raises if the result
    has a color-j matching of size s_j.
    """
    lam = formula_value(inst) - 1
    if lam < inst.r:
        raise InputError(f"no edges to color: Lambda = {lam} < r = {inst.r}", "s")
    partition = bad_partition(inst)
    coloring = first_block_coloring(complete_uniform(lam, inst.r), partition, list(range(1, inst.t + 1)))
    if not is_matching_coloring(coloring, inst.tau()):
        raise ConsistencyError("bad coloring has a monochromatic s_j-matching")
    return coloring


def arrows(n: int, inst: RamseyInstance, budget: Budget | None = None) -> bool:
    """Does every t-coloring of K_n^r contain a color-j matching of size s_j?

    Searches for a coloring avoiding all of them (a matching coloring with
    caps s_j - 1); the answer is True exactly when none exists.  Colors with
    equal s_j are interchangeable in that search.
    """
    if n < inst.r:
        raise InputError(f"need n >= r, got n={n}, r={inst.r}", "n")
    return avoiding_coloring(n, inst, budget) is None


def avoiding_coloring(n: int, inst: RamseyInstance, budget: Budget | None = None) -> EdgeColoring | None:
    """A t-coloring of K_n^r with no color-j s_j-matching, or None."""
    h = complete_uniform(n, inst.r)
    slots = color_edges_with_caps(h, [sj - 1 for sj in inst.s], budget)
    if slots is None:
        return None
    return EdgeColoring(h, tuple(j + 1 for j in slots))


def arrows_by_enumeration(n: int, inst: RamseyInstance) -> bool:
    """Plain enumeration of all t^|E| colorings; only for tiny instances."""
    h = complete_uniform(n, inst.r)
    for colors in product(range(1, inst.t + 1), repeat=len(h.edges)):
        c = EdgeColoring(h, colors)
        if not any(has_matching_of_size(c.class_of(j), inst.s[j - 1]) for j in range(1, inst.t + 1)):
            return False
    return True


@dataclass
class RamseyReport:
    instance: RamseyInstance
    formula: int
    verified_false_at: int | None = None
    verified_true_at: int | None = None
    exact: int | None = None
    status: str = "unknown"
    false_witness: EdgeColoring | None = None
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "instance": self.instance.to_json(),
            "formula": self.formula,
            "verified_false_at": self.verified_false_at,
            "verified_true_at": self.verified_true_at,
            "exact": self.exact,
            "status": self.status,
        }
        if self.verified_true_at is not None:
            out["exhaustion"] = (f"exhaustive search: no coloring of K_{self.verified_true_at}^{self.instance.r} "
                                 f"avoids all targets")
        if self.false_witness is not None:
            out["false_witness"] = {"n": self.false_witness.target.n, "r": self.instance.r,
                                    **self.false_witness.to_json()}
        if self.note:
            out["note"] = self.note
        return out


def ramsey_report(inst: RamseyInstance, budget: Budget | None = None, max_steps: int = 3) -> RamseyReport:
    """Exact R_r(s) via the extremal coloring below and an exhaustive check above.

    ``status`` is "confirmed" when the exact value equals the formula,
    "refuted" when it differs, and "unknown" when the budget ran out (the
    arrowing verdict is then reported as unknown, never as false).
    """
    formula = formula_value(inst)
    report = RamseyReport(inst, formula)
    lam = formula - 1
    if lam >= inst.r:
        report.false_witness = bad_coloring(inst)
        report.verified_false_at = lam
    else:
        # K_lam^r has no edges, so nothing can contain an s_j-matching
        report.verified_false_at = lam
        report.note = f"K_{lam}^{inst.r} has no edges"
    n = formula
    for _ in range(max_steps):
        try:
            witness = avoiding_coloring(n, inst, budget)
        except BudgetExceeded:
            report.note = (report.note + "; " if report.note else "") + f"arrows({n}) unknown: budget exceeded"
            return report
        if witness is None:
            report.verified_true_at = n
            report.exact = n
            break
        report.verified_false_at = n
        report.false_witness = witness
        n += 1
    if report.exact is None:
        report.status = "unknown"
    elif report.exact == formula:
        report.status = "confirmed"
    else:
        report.status = "refuted"
    return report


def ramsey_number_exact(inst: RamseyInstance, budget: Budget | None = None) -> int:
    report = ramsey_report(inst, budget)
    if report.exact is None:
        raise BudgetExceeded("Ramsey search did not finish",
                             {"lower": (report.verified_false_at or 0) + 1, "upper": report.verified_true_at})
    return report.exact


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def proposition8_bounds(inst: RamseyInstance, p: int) -> tuple[int, int]:
    """Lower and upper bounds on R_r(s) from a prime p >= s_t."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime", "p")
    if inst.s[-1] > p:
        raise InputError(f"need s_t <= p, got s_t={inst.s[-1]}, p={p}", "p")
    base = 1 + sum(inst.s) - inst.t
    return base + inst.s[-1] * (inst.r - 1), base + p * (inst.r - 1)


def coloring_has_no_target(coloring: EdgeColoring, inst: RamseyInstance) -> bool:
    """Replay check for a reported non-arrowing witness."""
    return all(c in range(1, inst.t + 1) for c in coloring.colors) and is_matching_coloring(coloring, inst.tau())


def witness_from_json(data: dict) -> EdgeColoring:
    h = complete_uniform(int(data["n"]), int(data["r"]))
    return EdgeColoring.from_json(data, h)

