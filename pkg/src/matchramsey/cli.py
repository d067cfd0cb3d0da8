"""Command-line front end.

Every command builds a report ``{"command", "inputs_digest", "results",
"timing_ms", "budget"}``; ``--json`` prints it, otherwise a short text
summary goes to stdout.  Exit codes: 0 success, 1 property violation,
2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import acceptance
from .alternation import SignedVector, alt_with_ordering_witness, alternation_number_result
from .errors import Budget, BudgetExceeded, InputError, PropertyViolation
from .hypergraph import INFINITY, Hypergraph, chromatic_number, is_proper_coloring
from .kneser import kneser_power, theorem1_lower_bound
from .matchcolor import (
    ColorFrequencyMap,
    EdgeColoring,
    is_matching_coloring,
    matching_chromatic_number,
    theorem3_lower_bound,
)
from .ramsey import (
    RamseyInstance,
    avoiding_coloring,
    coloring_has_no_target,
    formula_value,
    proposition8_bounds,
    ramsey_report,
    witness_from_json,
)
from .tucker import (
    LambdaMap,
    build_lambda_from_coloring,
    check_hypotheses,
    search_counterexample,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _ext(value):
    return "infinity" if value == INFINITY else value


def _int_list(text: str, field: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputError(f"--{field} expects comma-separated integers, got {text!r}", field) from None


def _load_json(path: str | None, field: str) -> dict:
    if path is None:
        raise InputError(f"--{field} is required", field)
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}", field) from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})", field) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _require(value, field: str):
    if value is None:
        raise InputError(f"--{field} is required", field)
    return value


# --- commands ---------------------------------------------------------------


def cmd_alt(args, budget):
    if args.x is not None:
        vec = SignedVector(_require(args.p, "p"), tuple(_int_list(args.x, "x")))
        return {"p": vec.p, "x": list(vec.x)}, {"alt": vec.alt()}
    h = Hypergraph.from_json(_load_json(args.input, "input"))
    p = _require(args.p, "p")
    if args.sigma is not None:
        sigma = _int_list(args.sigma, "sigma")
        value, witness = alt_with_ordering_witness(h, p, sigma, budget)
        return ({"hypergraph": h.to_json(), "p": p, "sigma": sigma},
                {"alt_sigma": value, "witness": witness.to_json()})
    result = alternation_number_result(h, p, budget)
    return {"hypergraph": h.to_json(), "p": p}, result.to_json()


def cmd_chi(args, budget):
    h = Hypergraph.from_json(_load_json(args.input, "input"))
    inputs = {"hypergraph": h.to_json()}
    if args.coloring is not None:
        colors = _load_json(args.coloring, "coloring").get("coloring")
        if not isinstance(colors, list):
            raise InputError('coloring file needs a "coloring" list', "coloring")
        inputs["coloring"] = colors
        return inputs, {"proper": is_proper_coloring(h, colors), "colors_used": len(set(colors))}
    return inputs, chromatic_number(h, budget).to_json()


def cmd_kneser(args, budget):
    h = Hypergraph.from_json(_load_json(args.input, "input"))
    r = _require(args.r, "r")
    kp = kneser_power(h, r)
    results = {"kneser": kp.graph.to_json(), "correspondence": kp.correspondence_json()}
    if args.check:
        chi = chromatic_number(kp.graph, budget)
        alt = alternation_number_result(h, r, budget)
        bound = theorem1_lower_bound(h.n, alt.value, r)
        results.update({"chi": chi.to_json(), "alternation": alt.to_json(), "lower_bound": bound,
                        "bound_holds": chi.value >= bound})
        if chi.value < bound:
            raise PropertyViolation(results)
    return {"hypergraph": h.to_json(), "r": r}, results


def cmd_chi_m(args, budget):
    h = Hypergraph.from_json(_load_json(args.input, "input"))
    tau = ColorFrequencyMap.from_json(_load_json(args.tau, "tau"))
    inputs = {"hypergraph": h.to_json(), "tau": tau.to_json()}
    if args.coloring is not None:
        coloring = EdgeColoring.from_json(_load_json(args.coloring, "coloring"), h)
        inputs["coloring"] = coloring.to_json()
        return inputs, {"matching_coloring": is_matching_coloring(coloring, tau),
                        "palette_size": len(coloring.palette)}
    result = matching_chromatic_number(h, tau, budget)
    results = result.to_json()
    if tau.r >= 2:
        alt = alternation_number_result(h, tau.r, budget)
        bound = theorem3_lower_bound(h.n, alt.value, tau, require_nonempty=bool(h.edges))
        results.update({"alternation": alt.to_json(), "lower_bound": _ext(bound),
                        "bound_holds": result.value >= bound})
        if result.value < bound:
            raise PropertyViolation(results)
    return inputs, results


def _instance(args) -> RamseyInstance:
    return RamseyInstance(_require(args.r, "r"), tuple(_int_list(_require(args.s, "s"), "s")))


def cmd_ramsey(args, budget):
    inst = _instance(args)
    inputs = {"instance": inst.to_json()}
    if args.action == "formula":
        results = {"formula": formula_value(inst)}
        if args.p is not None:
            lower, upper = proposition8_bounds(inst, args.p)
            inputs["p"] = args.p
            results["prime_bounds"] = [lower, upper]
        return inputs, results
    if args.action == "check":
        n = _require(args.n, "n")
        if n < inst.r:
            raise InputError(f"need n >= r, got n={n}", "n")
        inputs["n"] = n
        if args.coloring is not None:
            data = _load_json(args.coloring, "coloring")
            data = data.get("witness", data)
            try:
                coloring = witness_from_json(data)
            except (KeyError, TypeError, ValueError):
                raise InputError('witness needs "n", "r" and "colors"', "coloring") from None
            if coloring.target.n != n:
                raise InputError(f"witness is for n={coloring.target.n}, not n={n}", "coloring")
            inputs["coloring"] = coloring.to_json()
            avoids = coloring_has_no_target(coloring, inst)
            return inputs, {"n": n, "avoids_all_targets": avoids, "arrows": False if avoids else "unknown"}
        try:
            witness = avoiding_coloring(n, inst, budget)
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), partial={"n": n, "arrows": "unknown"}) from None
        if witness is None:
            return inputs, {"n": n, "arrows": True, "proof": "exhaustive search found no avoiding coloring"}
        return inputs, {"n": n, "arrows": False, "witness": {"n": n, "r": inst.r, **witness.to_json()}}
    report = ramsey_report(inst, budget)
    results = report.to_json()
    if report.status == "refuted":
        raise PropertyViolation(results)
    if report.exact is None:
        raise BudgetExceeded(report.note, {"lower": report.verified_false_at + 1}, partial=results)
    return inputs, results


def cmd_tucker(args, budget):
    if args.action == "check":
        lam = LambdaMap.from_json(_load_json(args.input, "input"))
        report = check_hypotheses(lam)
        results = report.to_json()
        if report.hypotheses_hold and not report.conclusion_holds:
            raise PropertyViolation(results)
        return {"lambda": {"n": lam.n, "p": lam.p, "m": lam.m, "gamma": list(lam.gamma)}}, results
    if args.action == "hunt":
        n, p, m = _require(args.n, "n"), _require(args.p, "p"), _require(args.m, "m")
        gamma = _int_list(_require(args.gamma, "gamma"), "gamma")
        found = search_counterexample(n, p, m, gamma, budget)
        inputs = {"n": n, "p": p, "m": m, "gamma": gamma}
        if found is not None:
            raise PropertyViolation({"counterexample": found.to_json()})
        return inputs, {"counterexample": None}
    # build
    h = Hypergraph.from_json(_load_json(args.input, "input"))
    tau = ColorFrequencyMap.from_json(_load_json(args.tau, "tau"))
    p = _require(args.p, "p")
    if args.sigma is not None:
        sigma = _int_list(args.sigma, "sigma")
    else:
        sigma = list(alternation_number_result(h, p, budget).sigma)
    if args.coloring is not None:
        coloring = EdgeColoring.from_json(_load_json(args.coloring, "coloring"), h)
    else:
        coloring = matching_chromatic_number(h, tau, budget).coloring
        if coloring is None:
            raise InputError("no finite matching coloring exists for this tau", "tau")
    built = build_lambda_from_coloring(h, sigma, coloring, tau, p, order=args.order)
    report = check_hypotheses(built.lam)
    results = {
        "sigma": list(built.sigma),
        "alt_sigma": built.alt_sigma,
        "sigma_optimal": built.sigma_optimal,
        "palette": list(built.palette),
        "coloring": coloring.to_json(),
        "check": report.to_json(),
        "lambda": built.lam.to_json(),
    }
    if args.output:
        Path(args.output).write_text(json.dumps(built.lam.to_json(), sort_keys=True) + "\n")
    inputs = {"hypergraph": h.to_json(), "tau": tau.to_json(), "p": p, "sigma": sigma, "order": args.order}
    if not (report.hypotheses_hold and report.conclusion_holds):
        raise PropertyViolation(results)
    return inputs, results


def cmd_selftest(args, budget):
    known = [c[0] for c in acceptance.CRITERIA]
    wanted = _int_list(args.only, "only") if args.only else known
    unknown = [k for k in wanted if k not in known]
    if unknown:
        raise InputError(f"no acceptance criterion numbered {unknown[0]}", "only")
    outcomes = [acceptance.run_criterion(k) for k in wanted]
    for outcome in outcomes:
        print(outcome.line(), file=sys.stderr)
    results = {"criteria": [o.to_json() for o in outcomes], "all_passed": all(o.passed for o in outcomes)}
    if not results["all_passed"]:
        raise PropertyViolation(results)
    return {"criteria": wanted}, results


COMMANDS = {
    "alt": cmd_alt,
    "chi": cmd_chi,
    "kneser": cmd_kneser,
    "chi-m": cmd_chi_m,
    "ramsey": cmd_ramsey,
    "tucker": cmd_tucker,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the full JSON report")
    common.add_argument("--budget-ms", type=float, default=None, help="wall-clock budget for exact searches")
    common.add_argument("--threads", type=_positive, default=1,
                        help="worker count (results do not depend on it)")

    parser = argparse.ArgumentParser(prog="matchramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alt", parents=[common], help="alt of a signed vector, or alt_p of a hypergraph")
    p.add_argument("--p", type=int)
    p.add_argument("--x", help="signed vector entries, e.g. 2,0,2,1,0,3")
    p.add_argument("--input", help="hypergraph JSON file")
    p.add_argument("--sigma", help="vertex ordering, e.g. 3,1,2 (default: minimise over all)")

    p = sub.add_parser("chi", parents=[common], help="weak chromatic number of a hypergraph")
    p.add_argument("--input")
    p.add_argument("--coloring", help='verify a {"coloring": [...]} file instead of solving')

    p = sub.add_parser("kneser", parents=[common], help="general Kneser hypergraph KG^r(H)")
    p.add_argument("--input")
    p.add_argument("--r", type=int)
    p.add_argument("--check", action="store_true", help="also test chi(KG^r(H)) against the alternation bound")

    p = sub.add_parser("chi-m", parents=[common], help="tau-matching chromatic number")
    p.add_argument("--input")
    p.add_argument("--tau")
    p.add_argument("--coloring", help='verify a {"colors": [...]} file instead of solving')

    p = sub.add_parser("ramsey", parents=[common], help="matching Ramsey numbers")
    p.add_argument("action", choices=("formula", "check", "search"))
    p.add_argument("--r", type=int)
    p.add_argument("--s", help="matching sizes, e.g. 2,3")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int, help="prime for the two-sided bound (formula only)")
    p.add_argument("--coloring", help="check: replay a reported non-arrowing witness")

    p = sub.add_parser("tucker", parents=[common], help="generalized Z_p-Tucker conditions")
    p.add_argument("action", choices=("check", "build", "hunt"))
    p.add_argument("--input", help="lambda JSON (check) or hypergraph JSON (build)")
    p.add_argument("--tau")
    p.add_argument("--p", type=int)
    p.add_argument("--sigma")
    p.add_argument("--coloring")
    p.add_argument("--order", choices=("colex", "lex"), default="colex")
    p.add_argument("--output", help="also write the lambda table to this file")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--gamma", help="e.g. 1,1")

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance table")
    p.add_argument("--only", help="criterion numbers, e.g. 1,5")
    return parser


def _digest(inputs) -> str:
    return hashlib.sha256(json.dumps(inputs, sort_keys=True).encode()).hexdigest()


def _arguments(args) -> dict:
    """Fallback digest source when a command fails before recording its inputs."""
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("json", "threads", "budget_ms")}


def _summary(results: dict) -> str:
    lines = []
    for key, value in results.items():
        if isinstance(value, (dict, list)) and len(json.dumps(value)) > 200:
            continue
        lines.append(f"{key}: {json.dumps(value) if isinstance(value, (dict, list)) else value}")
    return "\n".join(lines)


def run(argv: list[str] | None = None) -> tuple[int, dict]:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_OK if exc.code == 0 else EXIT_INPUT), {}
    budget = Budget(args.budget_ms)
    start = time.perf_counter()
    code, inputs, results, status = EXIT_OK, {}, {}, "ok"
    try:
        inputs, results = COMMANDS[args.command](args, budget)
    except PropertyViolation as exc:
        code = EXIT_VIOLATION
        results = {"violation": exc.args[0] if exc.args else str(exc)}
    except BudgetExceeded as exc:
        code, status = EXIT_BUDGET, "exceeded"
        results = {"error": str(exc), "bounds": {k: _ext(v) for k, v in exc.bounds.items()}}
        if exc.partial is not None:
            results["partial"] = exc.partial
    except InputError as exc:
        code = EXIT_INPUT
        results = {"error": str(exc), "field": exc.field}
    report = {
        "command": argv,
        "inputs_digest": _digest(inputs or _arguments(args)),
        "results": results,
        "timing_ms": round((time.perf_counter() - start) * 1000, 3),
        "budget": {"ms": args.budget_ms, "status": status},
    }
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(_summary(results))
    if code == EXIT_INPUT:
        print(f"error: {results['error']}", file=sys.stderr)
    return code, report


def main() -> None:
    code, _ = run()
    sys.exit(code)


if __name__ == "__main__":
    main()
