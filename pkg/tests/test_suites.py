import json

import pytest

from nestkit.reporting import SuiteReport, Violation, sort_violations
from nestkit.suites import SuiteConfig, run_suite, suite_names

FAST = SuiteConfig(iters=300)


def test_all_suites_pass_at_reduced_iterations():
    for name in suite_names():
        report = run_suite(name, FAST)
        assert report.passed, report.summary()
        assert report.instances > 0
        assert report.config["seed"] == FAST.seed


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("no-such-suite")


def test_reports_are_deterministic():
    first = run_suite("generated-orders", SuiteConfig(iters=500, seed=7))
    second = run_suite("generated-orders", SuiteConfig(iters=500, seed=7))
    assert first.to_json() == second.to_json()
    other_seed = run_suite("generated-orders", SuiteConfig(iters=500, seed=8))
    assert other_seed.to_json() != first.to_json() or (
        other_seed.instances == first.instances
    )
    # timing never leaks into the canonical document
    doc = json.loads(first.to_json())
    assert "wall_ms" not in doc
    assert "wall_ms" in json.loads(first.to_json(include_timing=True))


def test_worker_count_does_not_change_documents():
    sequential = run_suite("interlocking", SuiteConfig(workers=1))
    parallel = run_suite("interlocking", SuiteConfig(workers=2))
    assert sequential.to_json() == parallel.to_json()


def test_violation_sorting_and_status():
    violations = [
        Violation("b", {"x": 2}),
        Violation("a", {"x": 1}),
        Violation("a", {"x": 0}),
    ]
    ordered = sort_violations(violations)
    assert [v.property_id for v in ordered] == ["a", "a", "b"]
    report = SuiteReport("demo", {}, 3, ordered)
    assert report.status == "fail"
    assert "FAIL a" in report.summary()
    assert SuiteReport("demo", {}, 3, ()).status == "pass"


def test_census_notes_present():
    report = run_suite("sup-conditions", SuiteConfig())
    joined = " ".join(report.notes)
    assert "one-point universe" in joined
    assert "empty members" in joined
    assert "co-singleton" in joined
