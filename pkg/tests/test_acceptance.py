"""Acceptance gate: one test per criterion, each printing a single pass/fail line.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the lines inline;
they are also collected into a terminal summary section.
"""

import time

import pytest

from orderlab.lab import SuiteSpec, run_suite
from orderlab.topologies import enumerate_topologies

from conftest import ACCEPTANCE_LINES, universe


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"AC{number:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def timed(spec: SuiteSpec, jobs: int = 1):
    start = time.perf_counter()
    report = run_suite(spec, jobs=jobs)
    return report, time.perf_counter() - start


def failures(*reports) -> int:
    return sum(r.failure_count for r in reports)


def test_ac01_nest_order_laws():
    report, secs = timed(SuiteSpec("NESTORD", 4))
    ok = report.passed and secs < 60 and report.per_n == {"0": 2, "1": 4, "2": 12, "3": 52, "4": 300}
    record(1, "NESTORD n<=4 exhaustive", ok,
           f"{report.instances_checked} nests, {report.failure_count} failures, {secs:.2f}s (limit 60s)")
    assert ok


def test_ac02_twin_nest_criterion():
    exhaustive = run_suite(SuiteSpec("T1", 3))
    sampled = run_suite(SuiteSpec("T1", 5, mode="sampled", samples=10_000, seed=1, min_n=4))
    ok = failures(exhaustive, sampled) == 0 and sampled.instances_checked >= 10_000
    record(2, "T1 n<=3 exhaustive + sampled n=4-5", ok,
           f"{exhaustive.instances_checked} exhaustive pairs, {sampled.instances_checked} sampled pairs "
           f"{sampled.per_n}, {failures(exhaustive, sampled)} failures")
    assert ok


def test_ac03_interlocking_clauses():
    report = run_suite(SuiteSpec("T2", 5))
    ok = report.passed and report.per_n["5"] > 0
    record(3, "T2 n<=5 exhaustive over T0 nests", ok,
           f"{report.instances_checked} nests, {report.failure_count} failures")
    assert ok


def test_ac04_formula_suites():
    reports = [run_suite(SuiteSpec(s, 4)) for s in ("L2", "L3", "L4")]
    ok = failures(*reports) == 0
    l3 = reports[1].observations
    reported = ", ".join(f"{k}={v}" for k, v in sorted(l3.items()) if k.startswith("non_t0"))
    record(4, "L2/L3/L4 n<=4 exhaustive", ok,
           f"{[r.instances_checked for r in reports]} nests, {failures(*reports)} assertion failures; "
           f"L3 on non-T0 nests (reported only): {reported}")
    assert ok


def test_ac05_discrete_interval_remark():
    report = run_suite(SuiteSpec("R1", 5))
    ok = report.passed
    record(5, "R1 n<=5 over T0 nests", ok, f"{report.instances_checked} nests, {report.failure_count} failures")
    assert ok


def test_ac06_inclusion_chains():
    report = run_suite(SuiteSpec("L1", 4))
    ok = report.passed
    record(6, "L1 n<=4 exhaustive", ok,
           f"{report.instances_checked} pairs with T1 union "
           f"({report.observations.get('both_interlocking', 0)} both interlocking), {report.failure_count} failures")
    assert ok


def test_ac07_ray_topology_biconditionals():
    report, secs = timed(SuiteSpec("P1", 4, min_n=3))
    counts = (report.per_n.get("3"), report.per_n.get("4"))
    ok = report.passed and counts == (171, 3994) and secs < 120
    record(7, "P1 n=3,4 exhaustive", ok,
           f"{counts[0]} + {counts[1]} relations (expected 171 + 3994), {report.failure_count} failures, "
           f"{secs:.2f}s (limit 120s)")
    assert ok


def test_ac08_interval_equals_order():
    exhaustive = run_suite(SuiteSpec("T4", 4))
    sampled = run_suite(SuiteSpec("T4", 5, mode="sampled", samples=10_000, seed=1))
    ok = failures(exhaustive, sampled) == 0 and sampled.instances_checked >= 10_000
    record(8, "T4 n<=4 exhaustive + sampled n=5", ok,
           f"{exhaustive.instances_checked} + {sampled.instances_checked} relations, "
           f"{failures(exhaustive, sampled)} failures; equality without all conditions: "
           f"{exhaustive.observations.get('equality_without_all_conditions', 0)} exhaustive")
    assert ok


def test_ac09_condition1_on_linear_orders():
    report = run_suite(SuiteSpec("R2", 6))
    obs = report.observations
    ok = report.passed and report.per_n.get("6") == 720
    record(9, "R2 n<=6 strict total orders", ok,
           f"{report.instances_checked} orders ({report.per_n.get('6')} at n=6), {report.failure_count} failures; "
           f"conditions 2/3/4 hold on {obs.get('condition2_holds', 0)}/{obs.get('condition3_holds', 0)}/"
           f"{obs.get('condition4_holds', 0)}")
    assert ok


def test_ac10_minimal_generated_topology():
    oracle_size = len(list(enumerate_topologies(universe(3))))
    report = run_suite(SuiteSpec("MINTOP", 3, min_n=3))
    ok = report.passed and oracle_size == 29 and report.instances_checked == 163
    record(10, "MINTOP n=3, families of <=4 sets", ok,
           f"{report.instances_checked} subbases against {oracle_size} topologies, {report.failure_count} failures")
    assert ok


def test_ac11_finite_characterization():
    report = run_suite(SuiteSpec("T3FIN", 4))
    ok = report.passed and report.per_n.get("4") == 355
    record(11, "T3FIN n<=4 all topologies", ok,
           f"{report.instances_checked} topologies, {report.failure_count} failures")
    assert ok


@pytest.mark.parametrize("jobs", [2, 4])
def test_ac12_worker_count_reproducibility(jobs):
    specs = [
        SuiteSpec("T1", 5, mode="sampled", samples=2_000, seed=2026, min_n=4),
        SuiteSpec("T4", 5, mode="sampled", samples=500, seed=7),
        SuiteSpec("P1", 3),
    ]
    same = [run_suite(s, jobs=1).to_json(include_timing=False) == run_suite(s, jobs=jobs).to_json(include_timing=False)
            for s in specs]
    ok = all(same)
    record(12, f"byte-identical JSON, 1 vs {jobs} workers", ok,
           f"{sum(same)}/{len(same)} specs identical (wall_time_ms excluded)")
    assert ok
