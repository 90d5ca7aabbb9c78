"""Command-line front end: ``lmvt solve | gen | bench | verify``.

Instances and reports are JSON, sweeps are CSV, rationals travel as
``"p/q"`` strings and an unassigned slot is ``null``.  Exit codes: 0 ok,
1 failed check, 2 usage or malformed input, 3 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .core import (Instance, LeadFunction, SolveReport, as_fraction,
                   decide_lead, format_fraction, objective, random_instance)
from .errors import LMVTError, StateBudgetError, TooLargeForOracleError
from .exact_dp import DEFAULT_STATE_BUDGET, solve_exact
from .fptas import (as_epsilon, epsilon_for_ratio, guaranteed_bound_holds,
                    linear_bound_holds, solve_fptas)
from .oracle import brute_force_opt
from .reductions import PartitionInstance, partition_to_lmvt, solve_greedy

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

BENCH_HEADER = ("n,B,epsilon,trial,opt,fptas_value,true_value,ratio,"
                "guaranteed_bound,paper_bound_holds,states_exact,states_fptas,"
                "ms_exact,ms_fptas").split(",")


class UsageError(Exception):
    pass


# -- serialization ----------------------------------------------------------

def parse_rational(text, what: str) -> Fraction:
    if not isinstance(text, str):
        raise UsageError(f"{what} must be a 'p/q' string")
    try:
        return as_fraction(text)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"{what}: {exc}") from exc


def instance_from_json(obj) -> Tuple[Instance, Optional[Fraction]]:
    """Parse an instance document; returns the instance and the optional ``k``."""
    if not isinstance(obj, dict):
        raise UsageError("instance file must hold a JSON object")
    for key in ("n", "B", "rates"):
        if key not in obj:
            raise UsageError(f"instance file is missing {key!r}")
    n, B, rates = obj["n"], obj["B"], obj["rates"]
    if not isinstance(n, int) or not isinstance(B, int) or n < 1 or B < 1:
        raise UsageError("'n' and 'B' must be positive integers")
    if (not isinstance(rates, list) or len(rates) != n
            or any(not isinstance(row, list) or len(row) != B for row in rates)):
        raise UsageError(f"'rates' must be {n} arrays of {B} integers")
    if any(isinstance(r, bool) or not isinstance(r, int) for row in rates for r in row):
        raise UsageError("rates must be integers")
    lead = LeadFunction()
    if "lead" in obj:
        spec = obj["lead"]
        if not isinstance(spec, dict):
            raise UsageError("'lead' must be an object")
        lead = LeadFunction(parse_rational(spec.get("alpha", "1/1"), "lead.alpha"),
                            parse_rational(spec.get("beta", "0/1"), "lead.beta"))
    k = parse_rational(obj["k"], "k") if "k" in obj else None
    return Instance(rates, lead), k


def instance_to_json(inst: Instance, k: Optional[Fraction] = None) -> dict:
    obj = {"n": inst.n, "B": inst.B, "rates": [list(row) for row in inst.rates]}
    if not inst.lead.is_identity:
        obj["lead"] = {"alpha": format_fraction(inst.lead.alpha),
                       "beta": format_fraction(inst.lead.beta)}
    if k is not None:
        obj["k"] = format_fraction(k)
    return obj


def report_to_json(report: SolveReport, inst: Instance, k: Optional[Fraction],
                   timing: bool = True) -> dict:
    obj = {"algorithm": report.algorithm, "value": report.value}
    if report.algorithm == "fptas":
        obj["true_value"] = report.true_value
    obj["allocation"] = list(report.allocation.assign)
    obj["states_visited"] = report.states_visited
    obj["elapsed_ms"] = round(report.elapsed_ms, 3) if timing else 0
    if report.algorithm == "fptas":
        obj["epsilon"] = format_fraction(report.epsilon)
    if k is not None:
        obj["decision"] = decide_lead(inst, report.value, k)
    return obj


def dumps(obj) -> str:
    return json.dumps(obj) + "\n"


def read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def parse_range(text: str) -> List[int]:
    """``"3"`` or ``"1-4"`` (inclusive) or ``"1,3,5"``."""
    try:
        if "," in text:
            return [int(x) for x in text.split(",")]
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-", 1))
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}") from exc


# -- commands ---------------------------------------------------------------

def cmd_solve(args, out) -> int:
    inst, k = instance_from_json(read_json(args.input))
    if args.algo == "fptas":
        if (args.epsilon is None) == (args.delta is None):
            raise UsageError("fptas needs exactly one of --epsilon or --delta")
        if args.epsilon is not None:
            eps = parse_rational(args.epsilon, "--epsilon")
            try:
                eps = as_epsilon(eps)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        else:
            try:
                eps = epsilon_for_ratio(parse_rational(args.delta, "--delta"), inst.B)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        report = solve_fptas(inst, eps, state_budget=args.state_budget)
    else:
        if args.epsilon is not None or args.delta is not None:
            raise UsageError("--epsilon/--delta only apply to --algo fptas")
        if args.algo == "exact":
            report = solve_exact(inst, state_budget=args.state_budget)
        elif args.algo == "greedy":
            report = solve_greedy(inst)
        else:
            report = brute_force_opt(inst)
    out.write(dumps(report_to_json(report, inst, k, timing=not args.omit_timing)))
    return EXIT_OK


def cmd_gen(args, out) -> int:
    random_flags = (args.n, args.B, args.max_rate)
    if args.from_partition is not None:
        if any(f is not None for f in random_flags) or args.seed is not None:
            raise UsageError("--from-partition cannot be combined with random flags")
        try:
            items = [int(x) for x in args.from_partition.split(",")]
            p = PartitionInstance(tuple(items))
        except ValueError as exc:
            raise UsageError(f"--from-partition: {exc}") from exc
        inst, k = partition_to_lmvt(p)
        out.write(dumps(instance_to_json(inst, k)))
        return EXIT_OK
    if any(f is None for f in random_flags):
        raise UsageError("gen needs --n, --B and --max-rate, or --from-partition")
    if args.n < 1 or args.B < 1 or args.max_rate < 0:
        raise UsageError("need --n >= 1, --B >= 1, --max-rate >= 0")
    seed = 0 if args.seed is None else args.seed
    inst = random_instance(args.n, args.B, args.max_rate, np.random.default_rng(seed))
    out.write(dumps(instance_to_json(inst)))
    return EXIT_OK


def bench_rows(ns, Bs, epsilons, trials, seed, max_rate, state_budget, timing=True):
    """Yield ``(row, ok)`` for every (n, B, epsilon, trial) in sorted order."""
    for n in ns:
        for B in Bs:
            cases = []
            for trial in range(trials):
                rng = np.random.default_rng([seed, n, B, trial])
                inst = random_instance(n, B, max_rate, rng)
                cases.append((trial, inst, solve_exact(inst, state_budget)))
            for eps in epsilons:
                for trial, inst, exact in cases:
                    approx = solve_fptas(inst, eps, state_budget)
                    opt, v = exact.value, approx.value
                    ok = guaranteed_bound_holds(v, opt, eps, B)
                    ratio = Fraction(1) if opt == 0 else Fraction(v, opt)
                    row = [n, B, format_fraction(eps), trial, opt, v,
                           approx.true_value, f"{float(ratio):.6f}",
                           str(ok).lower(),
                           str(linear_bound_holds(v, opt, eps, B)).lower(),
                           exact.states_visited, approx.states_visited,
                           f"{exact.elapsed_ms:.3f}" if timing else "0",
                           f"{approx.elapsed_ms:.3f}" if timing else "0"]
                    yield row, ok


def cmd_bench(args, out) -> int:
    ns, Bs = parse_range(args.n_range), parse_range(args.B_range)
    if min(ns) < 1 or min(Bs) < 1 or args.trials < 0:
        raise UsageError("ranges must be positive and --trials nonnegative")
    try:
        epsilons = sorted({as_epsilon(parse_rational(e, "--epsilons"))
                           for e in args.epsilons.split(",")})
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    max_rate = args.max_rate
    if max_rate is None:
        max_rate = 6 if args.suite == "ratio" else 50
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BENCH_HEADER)
    failures = 0
    for row, ok in bench_rows(ns, Bs, epsilons, args.trials, args.seed, max_rate,
                              args.state_budget, timing=not args.omit_timing):
        writer.writerow(row)
        failures += not ok
    if failures:
        print(f"error: {failures} trial(s) violate the guaranteed bound",
              file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def cmd_verify(args, out) -> int:
    inst, _ = instance_from_json(read_json(args.input))
    rep = read_json(args.report)
    if not isinstance(rep, dict) or "allocation" not in rep or "value" not in rep:
        raise UsageError("report must be an object with 'allocation' and 'value'")
    try:
        achieved = objective(inst, rep["allocation"])
    except (LMVTError, TypeError) as exc:
        raise UsageError(f"allocation does not fit the instance: {exc}") from exc
    claimed = rep.get("true_value", rep["value"])
    consistent = achieved == claimed and achieved >= rep["value"]
    out.write(dumps({"value": achieved, "consistent": consistent}))
    return EXIT_OK if consistent else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lmvt", description="Max-min slot allocation for video transmission.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file, print a JSON report")
    p.add_argument("--input", required=True, help="instance JSON path, or - for stdin")
    p.add_argument("--algo", choices=["exact", "fptas", "greedy", "brute"], default="exact")
    p.add_argument("--epsilon", help="rounding parameter p/q for fptas")
    p.add_argument("--delta", help="target relative loss p/q for fptas, picks epsilon")
    p.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET)
    p.add_argument("--omit-timing", action="store_true",
                   help="report elapsed_ms as 0 so output is reproducible")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="print a random or Partition-derived instance")
    p.add_argument("--n", type=int)
    p.add_argument("--B", type=int)
    p.add_argument("--max-rate", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--from-partition", metavar="X1,X2,...")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="sweep exact vs fptas, print CSV")
    p.add_argument("--suite", choices=["ratio", "states"], default="ratio")
    p.add_argument("--n-range", default="2")
    p.add_argument("--B-range", default="4")
    p.add_argument("--epsilons", default="1/1")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-rate", type=int,
                   help="rates drawn from [0, max-rate]; default 6 (ratio) or 50 (states)")
    p.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET)
    p.add_argument("--omit-timing", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="re-evaluate a report against its instance")
    p.add_argument("--input", required=True)
    p.add_argument("--report", required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (StateBudgetError, TooLargeForOracleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (LMVTError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
