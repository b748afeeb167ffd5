"""Acceptance gate: one test per criterion, each printing a pass line.

Every check is exact (set rosters, boolean verdicts, byte-equal reports);
the only tolerances are the wall-clock budgets stated alongside each
criterion.  Run with ``pytest tests/test_acceptance.py -v -s`` to see the
pass lines as they happen.
"""

import time

from nestkit.core import Nest
from nestkit.groups import BUILTIN_GROUPS, order_compatible
from nestkit.suites import SuiteConfig, run_suite


def _run(name: str, budget_s: float, config: SuiteConfig | None = None):
    started = time.perf_counter()
    report = run_suite(name, config or SuiteConfig())
    elapsed = time.perf_counter() - started
    assert report.passed, report.summary()
    assert elapsed < budget_s, f"{name} took {elapsed:.1f}s (budget {budget_s}s)"
    return report, elapsed


def test_criterion_1_canonical_replay():
    report, elapsed = _run("replay", budget_s=1.0)
    assert report.instances == 11  # three finite and eight ray instances
    print(f"[acceptance] 1 canonical-replay: PASS "
          f"({report.instances} instances, {elapsed:.2f}s)")


def test_criterion_2_interlocking_triple_equivalence():
    report, elapsed = _run(
        "interlocking", budget_s=60.0, config=SuiteConfig(max_n=4, max_members=5)
    )
    # all nests on up to three points, plus the four-point nests (which never
    # exceed five members): 4 + 12 + 52 + 300 enumerated nests
    assert report.instances == 368
    print(f"[acceptance] 2 interlocking-triple: PASS "
          f"({report.instances} nests, {elapsed:.2f}s)")


def test_criterion_3_generated_order_suite():
    config = SuiteConfig(iters=10_000, seed=20260808)
    report, elapsed = _run("generated-orders", budget_s=60.0, config=config)
    assert report.config["iters"] == 10_000
    print(f"[acceptance] 3 generated-orders: PASS "
          f"({report.instances} instances, {elapsed:.2f}s)")


def test_criterion_4_sup_condition_suite_with_census():
    report, elapsed = _run("sup-conditions", budget_s=120.0, config=SuiteConfig(max_n=4))
    joined = " ".join(report.notes)
    assert "fires only for the empty-member nest on a one-point universe" in joined
    assert "fires only for nests of empty members" in joined
    assert "co-singleton" in joined  # the bare-escape refinement is stated
    print(f"[acceptance] 4 sup-conditions+census: PASS "
          f"({report.instances} instances, {elapsed:.2f}s)")


def test_criterion_5_bound_cover_suite():
    report, elapsed = _run("bound-covers", budget_s=60.0, config=SuiteConfig(max_n=4))
    print(f"[acceptance] 5 bound-covers: PASS "
          f"({report.instances} instances, {elapsed:.2f}s)")


def test_criterion_6_group_suite_and_witness():
    config = SuiteConfig(iters=10_000, seed=20260808)
    report, elapsed = _run("group-compatibility", budget_s=120.0, config=config)
    z3 = BUILTIN_GROUPS["z3"]()
    witness = Nest.of(z3.universe, [[0]])
    assert not order_compatible(z3, witness)
    print(f"[acceptance] 6 group-compatibility: PASS "
          f"({report.instances} instances, {elapsed:.2f}s; "
          f"three-cycle witness incompatible as required)")


def test_criterion_7_report_determinism():
    started = time.perf_counter()
    for name, config in (
        ("generated-orders", SuiteConfig(iters=2_000, seed=99)),
        ("group-compatibility", SuiteConfig(iters=1_000, seed=99)),
        ("sup-conditions", SuiteConfig()),
    ):
        first = run_suite(name, config)
        second = run_suite(name, config)
        assert first.to_json() == second.to_json(), f"{name} reports differ"
    elapsed = time.perf_counter() - started
    print(f"[acceptance] 7 determinism: PASS (byte-equal reports, {elapsed:.2f}s)")
