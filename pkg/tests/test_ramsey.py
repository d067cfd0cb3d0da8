import pytest

from matchramsey.errors import Budget, BudgetExceeded, InputError
from matchramsey.hypergraph import has_matching_of_size
from matchramsey.ramsey import (
    RamseyInstance,
    arrows,
    arrows_by_enumeration,
    bad_coloring,
    bad_partition,
    coloring_has_no_target,
    formula_value,
    proposition8_bounds,
    ramsey_number_exact,
    ramsey_report,
    witness_from_json,
)


@pytest.mark.parametrize("r,s,value", [
    (2, (2, 2), 5), (2, (2, 3), 7), (3, (2, 2), 7), (2, (1, 1), 2), (1, (3, 4), 6),
])
def test_formula_examples(r, s, value):
    assert formula_value(RamseyInstance(r, s)) == value


def test_instance_normalizes_and_validates():
    assert RamseyInstance(2, (3, 2)).s == (2, 3)
    for r, s in [(0, (2,)), (2, ()), (2, (0, 2))]:
        with pytest.raises(InputError):
            RamseyInstance(r, s)


@pytest.mark.parametrize("r,s", [(2, (2, 2)), (2, (2, 3)), (3, (2, 2)), (2, (1, 3)), (3, (1, 2, 2))])
def test_bad_coloring_avoids_every_target(r, s):
    inst = RamseyInstance(r, s)
    c = bad_coloring(inst)
    assert c.target.n == formula_value(inst) - 1
    assert bad_partition(inst).ground == c.target.n
    for j, sj in enumerate(inst.s, start=1):
        assert not has_matching_of_size(c.class_of(j), sj)
    assert coloring_has_no_target(c, inst)


def test_bad_coloring_needs_edges():
    with pytest.raises(InputError):
        bad_coloring(RamseyInstance(2, (1, 1)))


@pytest.mark.parametrize("s", [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (1, 1, 2)])
def test_search_matches_enumeration(s):
    inst = RamseyInstance(2, s)
    for n in range(2, 6):
        if len(s) ** (n * (n - 1) // 2) > 70_000:
            continue
        assert arrows(n, inst) == arrows_by_enumeration(n, inst)


@pytest.mark.parametrize("r,s", [(2, (2, 2)), (2, (2, 3)), (3, (1, 2))])
def test_arrowing_is_monotone(r, s):
    inst = RamseyInstance(r, s)
    verdicts = [arrows(n, inst) for n in range(r, formula_value(inst) + 2)]
    assert verdicts == sorted(verdicts)


FAST = [
    (2, (1, 1)), (2, (1, 2)), (2, (1, 3)), (2, (2, 2)), (2, (2, 3)), (2, (3, 3)),
    (2, (1, 1, 1)), (2, (1, 1, 2)), (2, (1, 2, 2)), (2, (2, 2, 2)), (2, (1, 2, 3)),
    (3, (1, 1)), (3, (1, 2)), (3, (1, 3)), (3, (2, 2)), (3, (1, 1, 1)), (3, (1, 1, 2)), (3, (1, 2, 2)),
]


@pytest.mark.parametrize("r,s", FAST)
def test_exact_value_equals_formula(r, s):
    report = ramsey_report(RamseyInstance(r, s), Budget(20_000))
    assert report.status == "confirmed", report.to_json()
    assert report.exact == formula_value(RamseyInstance(r, s))
    assert report.verified_false_at == report.exact - 1


@pytest.mark.parametrize("r,s", [(3, (2, 3)), (3, (2, 2, 2))])
def test_budgeted_search_never_refutes(r, s):
    report = ramsey_report(RamseyInstance(r, s), Budget(300))
    assert report.status in ("confirmed", "unknown")
    if report.status == "unknown":
        assert "unknown" in report.note and report.exact is None
        with pytest.raises(BudgetExceeded):
            ramsey_number_exact(RamseyInstance(r, s), Budget(300))


def test_uniformity_one():
    # every edge is a single vertex, so n arrows exactly when sum(s_j - 1) < n
    inst = RamseyInstance(1, (2, 3))
    assert ramsey_number_exact(inst) == formula_value(inst) == 4


def test_report_json_carries_a_replayable_witness():
    data = ramsey_report(RamseyInstance(2, (2, 3))).to_json()
    assert data["exact"] == 7 and data["status"] == "confirmed"
    witness = witness_from_json(data["false_witness"])
    assert witness.target.n == 6
    assert coloring_has_no_target(witness, RamseyInstance(2, (2, 3)))


def test_arrows_rejects_small_n():
    with pytest.raises(InputError):
        arrows(1, RamseyInstance(2, (2, 2)))


@pytest.mark.parametrize("r,s,p,bounds", [
    (2, (2, 2), 2, (5, 5)), (2, (2, 3), 3, (7, 7)), (2, (2, 3), 5, (7, 9)), (3, (2, 2), 3, (7, 9)),
])
def test_prime_bounds(r, s, p, bounds):
    assert proposition8_bounds(RamseyInstance(r, s), p) == bounds


def test_prime_bounds_preconditions():
    with pytest.raises(InputError):
        proposition8_bounds(RamseyInstance(2, (2, 2)), 4)
    with pytest.raises(InputError):
        proposition8_bounds(RamseyInstance(2, (2, 5)), 3)


def test_worked_examples():
    assert proposition8_bounds(RamseyInstance(3, (2, 2)), 2) == (7, 7)
    assert proposition8_bounds(RamseyInstance(2, (2, 4)), 5) == (9, 10)
    lower, upper = proposition8_bounds(RamseyInstance(1, (2, 3, 3)), 3)
    assert lower == upper
    for r in (1, 2, 3):
        assert formula_value(RamseyInstance(r, (1, 1, 1))) == r
    inst = RamseyInstance(2, (2, 2))
    assert arrows(5, inst) and not arrows(4, inst) and not arrows(3, inst)
    assert ramsey_number_exact(RamseyInstance(2, (1, 2))) == 4
    part = bad_partition(RamseyInstance(2, (2, 3)))
    assert part.blocks == (frozenset({1}), frozenset(range(2, 7)))
