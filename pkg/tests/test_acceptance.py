"""Exit criteria for the build, one test per criterion.

Each check returns ``(ok, detail)``; the tests assert ``ok`` and the detail
line is printed in the pytest summary.  ``python tests/test_acceptance.py``
runs the same checks standalone.
"""

import io
import itertools
import json
import math
import time
from fractions import Fraction

import numpy as np

from lmvt import (Instance, brute_force_opt, build_grid, constant_rate_opt,
                  lmvt_to_partition_witness, objective, partition_decide,
                  partition_to_lmvt, psi, random_instance, solve_exact,
                  solve_fptas)
from lmvt.cli import main as cli_main
from lmvt.exact_dp import run_layers
from lmvt.fptas import guaranteed_bound_holds, linear_bound_holds

SEED = 20240611


def oracle_family():
    """360 instances: n in 1..3, B in 1..6, rates in [0, 6], 20 per (n, B)."""
    out = []
    for n in (1, 2, 3):
        for B in range(1, 7):
            for trial in range(20):
                rng = np.random.default_rng([SEED, n, B, trial])
                out.append(random_instance(n, B, 6, rng))
    return out


def check_oracle_equivalence():
    start = time.perf_counter()
    family = oracle_family()
    mismatches = 0
    for inst in family:
        report = solve_exact(inst)
        if report.value != brute_force_opt(inst).value:
            mismatches += 1
        elif objective(inst, report.allocation) != report.value:
            mismatches += 1
    secs = time.perf_counter() - start
    ok = len(family) >= 300 and mismatches == 0 and secs < 30
    return ok, f"exact == brute force on {len(family)} instances, {mismatches} mismatches, {secs:.1f}s"


def check_guaranteed_ratio():
    start = time.perf_counter()
    family = oracle_family()
    epsilons = (Fraction(1, 10), Fraction(1, 2), Fraction(1))
    violations = trials = linear = 0
    for inst in family:
        opt = brute_force_opt(inst).value
        for eps in epsilons:
            v = solve_fptas(inst, eps).value
            trials += 1
            violations += not guaranteed_bound_holds(v, opt, eps, inst.B)
            linear += linear_bound_holds(v, opt, eps, inst.B)
    secs = time.perf_counter() - start
    ok = violations == 0 and secs < 60
    return ok, (f"v <= opt <= v(1+eps)^B in {trials - violations}/{trials} trials, "
                f"linear bound v(1+eps*B) >= opt held in {linear}/{trials} "
                f"({linear / trials:.1%}), {secs:.1f}s")


def grid_size_ok(size, top, base):
    # size <= log_base(top + 1) + 2  <=>  base^(size - 2) <= top + 1, exactly
    return size <= 2 or base ** (size - 2) <= top + 1


def check_state_compression():
    eps = Fraction(1, 2)
    eligible = fewer = 0
    bound_ok = True
    for trial in range(100):
        inst = random_instance(2, 8, 50, np.random.default_rng([SEED, 3, trial]))
        grid = build_grid(inst, eps)
        tops = [row[-1] for row in grid.rows]
        if not all(grid_size_ok(s, t, 1 + eps) for s, t in zip(grid.sizes, tops)):
            bound_ok = False
        layers = run_layers(inst, update=grid.snap)
        if max(len(layer.frontier) for layer in layers) > grid.state_bound:
            bound_ok = False
        if min(tops) >= 32:
            eligible += 1
            fewer += solve_fptas(inst, eps).states_visited < solve_exact(inst).states_visited
    share = fewer / eligible if eligible else 0.0
    ok = bound_ok and eligible > 0 and share >= 0.9
    return ok, (f"grid and layer bounds {'hold' if bound_ok else 'VIOLATED'}; "
                f"fptas visits fewer states on {fewer}/{eligible} ({share:.0%}) instances")


def check_reduction():
    start = time.perf_counter()
    rng = np.random.default_rng([SEED, 4])
    cases = disagreements = bad_witness = yes = 0
    for _ in range(150):
        size = int(rng.integers(1, 11))
        S = [int(x) for x in rng.integers(1, 13, size=size)]
        inst, k = partition_to_lmvt(S)
        report = solve_exact(inst)
        reached = report.value >= k
        cases += 1
        if partition_decide(S) != reached:
            disagreements += 1
        if reached:
            yes += 1
            left, right = lmvt_to_partition_witness(S, report.allocation)
            if not 2 * sum(left) == 2 * sum(right) == sum(S):
                bad_witness += 1
    secs = time.perf_counter() - start
    ok = cases >= 100 and disagreements == 0 and bad_witness == 0 and secs < 20
    return ok, (f"{cases} multisets ({yes} yes), {disagreements} disagreements, "
                f"{bad_witness} bad witnesses, {secs:.1f}s")


def check_constant_rate():
    start = time.perf_counter()
    wrong = total = 0
    for n, B, c in itertools.product(range(1, 7), range(1, 7), range(0, 6)):
        total += 1
        wrong += constant_rate_opt(n, B, c) != solve_exact(Instance([[c] * B] * n)).value
    secs = time.perf_counter() - start
    return wrong == 0 and secs < 10, f"{total - wrong}/{total} (n, B, c) agree, {secs:.1f}s"


def check_psi():
    start = time.perf_counter()
    failures = []
    for eps in (Fraction(1, 10), Fraction(1, 3), Fraction(1, 2), Fraction(1)):
        prev = 0
        for t in range(-5, 1001):
            p = psi(t, eps)
            if not 0 <= p <= max(0, t):
                failures.append((eps, t, "range"))
            if p < prev:
                failures.append((eps, t, "monotone"))
            if t >= 1 and not Fraction(t) / (1 + eps) - 1 < p:
                failures.append((eps, t, "lower bound"))
            prev = p
        power = Fraction(1)
        while power <= 1000:
            if power.denominator == 1 and psi(power.numerator, eps) != power:
                failures.append((eps, power, "fixed point"))
            power *= 1 + eps
    if psi(8, 1) != 8:
        failures.append((1, 8, "psi(8, 1)"))
    secs = time.perf_counter() - start
    return not failures and secs < 5, f"{len(failures)} failures over t in [-5, 1000] x 4 eps, {secs:.1f}s"


def _cli(argv):
    out = io.StringIO()
    code = cli_main(argv, out=out)
    return code, out.getvalue()


def check_cli_pipeline(workdir):
    transcripts = []
    for _ in range(2):
        lines = []
        for seed in range(5):
            code, inst_text = _cli(["gen", "--n", "2", "--B", "5", "--max-rate", "9",
                                    "--seed", str(seed)])
            path = workdir / f"inst{seed}.json"
            path.write_text(inst_text)
            lines.append(inst_text)
            for algo, extra in (("exact", []), ("fptas", ["--epsilon", "1/2"]),
                                ("greedy", []), ("brute", [])):
                code, rep_text = _cli(["solve", "--input", str(path), "--algo", algo,
                                       "--omit-timing", *extra])
                if code:
                    return False, f"solve exited {code}"
                rep = json.loads(rep_text)
                inst = Instance(json.loads(inst_text)["rates"])
                if objective(inst, rep["allocation"]) != rep.get("true_value", rep["value"]):
                    return False, f"report for {algo} does not re-evaluate"
                rep_path = workdir / f"rep{seed}{algo}.json"
                rep_path.write_text(rep_text)
                code, verdict = _cli(["verify", "--input", str(path), "--report", str(rep_path)])
                if code:
                    return False, f"verify rejected {algo}"
                lines += [rep_text, verdict]
        transcripts.append("".join(lines))
    same = transcripts[0] == transcripts[1]
    return same, f"gen -> solve -> verify over 5 seeds x 4 solvers, byte-identical: {same}"


def test_criterion_1_oracle_equivalence(record_criterion):
    ok, detail = check_oracle_equivalence()
    record_criterion(1, ok, detail)
    assert ok, detail


def test_criterion_2_guaranteed_ratio(record_criterion):
    ok, detail = check_guaranteed_ratio()
    record_criterion(2, ok, detail)
    assert ok, detail


def test_criterion_3_state_compression(record_criterion):
    ok, detail = check_state_compression()
    record_criterion(3, ok, detail)
    assert ok, detail


def test_criterion_4_reduction(record_criterion):
    ok, detail = check_reduction()
    record_criterion(4, ok, detail)
    assert ok, detail


def test_criterion_5_constant_rate(record_criterion):
    ok, detail = check_constant_rate()
    record_criterion(5, ok, detail)
    assert ok, detail


def test_criterion_6_psi(record_criterion):
    ok, detail = check_psi()
    record_criterion(6, ok, detail)
    assert ok, detail


def test_criterion_7_cli_pipeline(record_criterion, tmp_path):
    ok, detail = check_cli_pipeline(tmp_path)
    record_criterion(7, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    import pathlib
    import tempfile

    with tempfile.TemporaryDirectory() as tmp:
        checks = [check_oracle_equivalence, check_guaranteed_ratio, check_state_compression,
                  check_reduction, check_constant_rate, check_psi,
                  lambda: check_cli_pipeline(pathlib.Path(tmp))]
        for number, check in enumerate(checks, 1):
            ok, detail = check()
            print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
