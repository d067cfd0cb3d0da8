"""The acceptance table: each criterion runs at its fixed tolerance and reports pass/fail."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Callable

from .alternation import alt_of_vector, alternation_number
from .errors import Budget
from .hypergraph import Hypergraph, chromatic_number, complete_uniform
from .kneser import kneser_power, theorem1_lower_bound
from .matchcolor import (
    ColorFrequencyMap,
    corollary5_value,
    matching_chromatic_number,
    theorem3_lower_bound,
)
from .ramsey import (
    RamseyInstance,
    arrows,
    arrows_by_enumeration,
    bad_coloring,
    coloring_has_no_target,
    formula_value,
    ramsey_report,
)
from .tucker import build_lambda_from_coloring, check_hypotheses, rotate, search_counterexample


@dataclass
class Outcome:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number}. {self.name}: {self.detail} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3)}


def ramsey_small() -> tuple[bool, str, float]:
    inst = RamseyInstance(2, (2, 2))
    report = ramsey_report(inst)
    witness_ok = coloring_has_no_target(bad_coloring(inst), inst)
    enumerated = arrows_by_enumeration(4, inst)
    ok = report.exact == 5 == report.formula and witness_ok and not enumerated
    return ok, f"exact={report.exact} formula={report.formula} C_bad(4) valid={witness_ok} " \
               f"enumeration(4)={enumerated}", 1.0


def ramsey_asymmetric() -> tuple[bool, str, float]:
    inst = RamseyInstance(2, (2, 3))
    report = ramsey_report(inst)
    witness = bad_coloring(inst)
    ok = (report.exact == 7 == formula_value(inst) and witness.target.n == 6
          and coloring_has_no_target(witness, inst) and arrows(7, inst))
    return ok, f"exact={report.exact} formula={report.formula} C_bad on K_{witness.target.n}", 60.0


def ramsey_uniform3(budget_ms: float = 600_000) -> tuple[bool, str, float]:
    inst = RamseyInstance(3, (2, 2))
    witness = bad_coloring(inst)
    witness_ok = witness.target.n == 6 and coloring_has_no_target(witness, inst)
    report = ramsey_report(inst, Budget(budget_ms))
    if report.exact is None:
        ok = witness_ok and report.formula == 7 and "unknown" in report.note
        return ok, f"degraded: C_bad(6) valid={witness_ok}, formula={report.formula}, arrows(7) unknown", 600.0
    ok = witness_ok and report.exact == 7 == report.formula
    return ok, f"exact={report.exact} formula={report.formula} C_bad(6) valid={witness_ok}", 600.0


def alternation_fact() -> tuple[bool, str, float]:
    values = {n: alternation_number(complete_uniform(n, 2), 2) for n in range(2, 8)}
    seven = alternation_number(complete_uniform(7, 2), 3)
    ok = all(v == 2 for v in values.values()) and seven == 3
    return ok, f"alt_2(K_n^2) for n=2..7: {list(values.values())}; alt_3(K_7^2)={seven}", 120.0


def kneser_sharpness() -> tuple[bool, str, float]:
    h = complete_uniform(5, 2)
    chi = chromatic_number(kneser_power(h, 2).graph).value
    alt = alternation_number(h, 2)
    bound = theorem1_lower_bound(5, 2, 2)
    ok = chi == 3 == bound and alt == 2
    return ok, f"chi(KG^2(K_5^2))={chi}, bound={bound}, alt_2(K_5^2)={alt}", 1.0


def closed_form_equality() -> tuple[bool, str, float]:
    h = complete_uniform(6, 2)
    tau = ColorFrequencyMap(2, 1)
    chi_m = matching_chromatic_number(h, tau).value
    closed = corollary5_value(6, 2, 2, tau)
    lower = theorem3_lower_bound(6, alternation_number(h, 2), tau)
    ok = chi_m == closed == lower == 4
    return ok, f"chi_M={chi_m} closed form={closed} lower bound={lower}", 10.0


def labelling_instance() -> tuple[bool, str, float]:
    h = complete_uniform(4, 2)
    tau = ColorFrequencyMap(2, 1)
    coloring = matching_chromatic_number(h, tau).coloring
    built = build_lambda_from_coloring(h, (1, 2, 3, 4), coloring, tau, 2, require_optimal=True)
    report = check_hypotheses(built.lam)
    ok = (report.hypotheses_hold and report.sum_gamma == 4 == h.n
          and len(built.lam.table) == 80 and built.lam.m == 4)
    return ok, f"hypotheses hold={report.hypotheses_hold}, sum(gamma)={report.sum_gamma}, " \
               f"vectors={len(built.lam.table)}", 1.0


def tucker_hunt() -> tuple[bool, str, float]:
    ok = True
    parts = []
    for args in ((2, 2, 1, (1,)), (3, 2, 2, (1, 1))):
        start = time.perf_counter()
        found = search_counterexample(*args)
        seconds = time.perf_counter() - start
        ok = ok and found is None and seconds < 10.0
        parts.append(f"(n={args[0]}, p={args[1]}, gamma={args[3]}): {found} in {seconds:.2f}s")
    return ok, "; ".join(parts), 20.0


def random_hypergraph(rng: random.Random, max_n: int = 7, max_edges: int = 10) -> Hypergraph:
    n = rng.randint(1, max_n)
    count = rng.randint(0, max_edges)
    full = (1 << n) - 1
    return Hypergraph(n, tuple(rng.randint(1, full) for _ in range(count)))


def random_tau(rng: random.Random, r: int) -> ColorFrequencyMap:
    table = {c: rng.randint(0, r - 1) for c in range(1, 5) if rng.random() < 0.5}
    return ColorFrequencyMap(r, rng.randint(0, r - 1), table)


def property_suite(seed: int = 0, graphs: int = 500, vectors: int = 10_000) -> tuple[bool, str, float]:
    rng = random.Random(seed)
    bound_violations = 0
    for _ in range(graphs):
        h = random_hypergraph(rng)
        r = rng.choice((2, 3))
        tau = random_tau(rng, r)
        lower = theorem3_lower_bound(h.n, alternation_number(h, r), tau)
        if lower > matching_chromatic_number(h, tau).value:
            bound_violations += 1
    vector_violations = 0
    for _ in range(vectors):
        p = rng.choice((2, 3, 5))
        x = [rng.randint(0, p) for _ in range(rng.randint(0, 10))]
        sub = [v if rng.random() < 0.6 else 0 for v in x]
        if alt_of_vector(sub) > alt_of_vector(x):
            vector_violations += 1
        if alt_of_vector(rotate(x, rng.randint(1, p), p)) != alt_of_vector(x):
            vector_violations += 1
    ok = bound_violations == 0 and vector_violations == 0
    return ok, f"{graphs} hypergraphs: {bound_violations} bound violations; " \
               f"{vectors} vectors: {vector_violations} violations", math.inf


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str, float]]]] = [
    (1, "Ramsey r=2 s=(2,2)", ramsey_small),
    (2, "Ramsey r=2 s=(2,3)", ramsey_asymmetric),
    (3, "Ramsey r=3 s=(2,2)", ramsey_uniform3),
    (4, "alternation of K_n^2", alternation_fact),
    (5, "Kneser bound sharp at K_5^2", kneser_sharpness),
    (6, "chi_M(K_6^2) closed form", closed_form_equality),
    (7, "labelling from a coloring of K_4^2", labelling_instance),
    (8, "no small Tucker counterexample", tucker_hunt),
    (9, "random property suite", property_suite),
]


def run_criterion(number: int) -> Outcome:
    _, name, check = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    passed, detail, limit = check()
    seconds = time.perf_counter() - start
    if seconds >= limit:
        passed = False
        detail += f"; over time limit {limit:.0f}s"
    return Outcome(number, name, passed, detail, seconds)


def run_all() -> list[Outcome]:
    return [run_criterion(number) for number, _, _ in CRITERIA]
