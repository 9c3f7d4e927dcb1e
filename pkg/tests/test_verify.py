"""Tests for the randomized verification checks and the suite runner."""

import json
from fractions import Fraction

import pytest

from szego import CheckReport, Poly, available_checks, run_suite
from szego.verify import (
    check_alternation_iteration,
    check_cone_exp,
    check_cone_finite,
    check_derivative_identities,
    check_eventual_hyperbolicity,
    check_halfplane_not_invariant,
    check_hyperbolization,
    check_integer_intervals,
    check_interval_localization,
    check_root_multiplicity,
    check_sign_experiments,
    check_taylor_sign_rule,
    check_transform_positivity,
    payload_csv_rows,
    reports_payload,
    suite_alternation_iteration,
    suite_eventual_hyperbolicity,
    write_reports_csv,
    write_reports_json,
)

F = Fraction


def test_check_report_payload_shape():
    rep = CheckReport("demo", 10, [], 42, 0.5, [{"hint": 1}])
    assert rep.passed
    payload = rep.to_payload()
    assert payload == {
        "check_id": "demo",
        "trials": 10,
        "passed": True,
        "failures": [],
        "notes": [{"hint": 1}],
        "seed": 42,
    }
    assert "elapsed" not in payload  # timing stays out of comparable output
    bad = CheckReport("demo", 10, [{"trial": 3}], 42, 0.5)
    assert not bad.passed


def test_cone_checks_pass():
    for n, k in [(1, 1), (2, 1), (3, 2)]:
        rep = check_cone_finite(n, k, trials=30, seed=1)
        assert rep.passed, rep.failures[:2]
        assert rep.trials == 30
    for m in [1, 2, 4]:
        rep = check_cone_exp(m, trials=30, seed=1)
        assert rep.passed, rep.failures[:2]


def test_interval_localization_passes():
    for n, k in [(2, 1), (3, 2)]:
        rep = check_interval_localization(n, k, trials=25, seed=2)
        assert rep.passed, rep.failures[:2]
        assert rep.check_id == f"interval_localization[n={n},k={k}]"


def test_interval_localization_nu_floor():
    rep = check_interval_localization(2, 1, trials=25, seed=3, nu_min=1)
    assert rep.passed, rep.failures[:2]


def test_taylor_and_integer_interval_checks_pass():
    for m in [1, 2, 4]:
        assert check_taylor_sign_rule(m, trials=25, seed=4).passed
    for m in [2, 3]:
        assert check_integer_intervals(m, trials=25, seed=5).passed


def test_transform_positivity_passes():
    rep = check_transform_positivity(trials=40, seed=6)
    assert rep.passed, rep.failures[:2]


def test_alternation_worked_onset():
    rep = check_alternation_iteration(Poly([1, 3, 1]))
    assert rep.passed, rep.failures
    assert rep.notes == [{"nu0": 4}]


def test_alternation_rejects_low_degree():
    with pytest.raises(ValueError):
        check_alternation_iteration(Poly([1, 1]))
    with pytest.raises(ValueError):
        check_alternation_iteration(Poly([0.5, 0, 1]))


def test_eventual_hyperbolicity_worked():
    # x^2 - x + 1: first qualifying iterate is the second transform
    rep = check_eventual_hyperbolicity(Poly([1, -1, 1]))
    assert rep.passed, rep.failures
    assert rep.notes == [{"nu": 2}]
    # a planted zero root persists
    rep = check_eventual_hyperbolicity(Poly([0, -2, 0, 1]))
    assert rep.passed, rep.failures


def test_iteration_suites_pass():
    assert suite_alternation_iteration(trials=4, seed=7).passed
    assert suite_eventual_hyperbolicity(trials=4, seed=7).passed


def test_halfplane_check_scan_counts():
    rep = check_halfplane_not_invariant(trials=20, seed=8)
    assert rep.passed, rep.failures[:2]
    note = rep.notes[0]
    # both verdicts occur along the scan through the witness point
    assert note["scan_inside"] > 0 and note["scan_outside"] > 0
    assert note["scan_inside"] + note["scan_outside"] + note["scan_uncertain"] == 41


def test_sign_experiments_pass():
    rep = check_sign_experiments(k_values=(1, 2, 3), seed=9)
    assert rep.passed, rep.failures[:2]
    assert rep.trials == 3


def test_hyperbolization_pass():
    rep = check_hyperbolization(trials=6, seed=10)
    assert rep.passed, rep.failures[:2]
    stage = rep.notes[0]
    assert stage["stage"] == "finite iteration"
    assert stage["resolved"] + stage["unresolved_within_nu_max"] == 6


def test_composition_calculus_checks_pass():
    assert check_derivative_identities(trials=40, seed=11).passed
    assert check_root_multiplicity(trials=40, seed=11).passed


def test_checks_are_deterministic():
    a = check_cone_finite(2, 1, trials=20, seed=33).to_payload()
    b = check_cone_finite(2, 1, trials=20, seed=33).to_payload()
    assert a == b
    c = check_cone_finite(2, 1, trials=20, seed=34).to_payload()
    assert c["seed"] != a["seed"]


def test_available_checks_lists_registry():
    names = available_checks()
    assert "cone_finite" in names
    assert "sign_experiments" in names
    assert names == sorted(names)


def test_run_suite_full_and_filtered():
    reports = run_suite(trials=8, seed=12)
    ids = [r.check_id for r in reports]
    assert len(ids) == len(set(ids))
    assert any(i.startswith("cone_finite[") for i in ids)
    assert all(r.passed for r in reports), [
        (r.check_id, r.failures[:1]) for r in reports if not r.passed
    ]

    subset = run_suite(names=["derivative_identities"], trials=8, seed=12)
    assert [r.check_id for r in subset] == ["derivative_identities"]
    by_cell = run_suite(names=["cone_finite[n=1,k=2]"], trials=8, seed=12)
    assert [r.check_id for r in by_cell] == ["cone_finite[n=1,k=2]"]
    by_family = run_suite(names=["cone_exp"], trials=8, seed=12)
    assert all(r.check_id.startswith("cone_exp[") for r in by_family)
    assert len(by_family) == 3


def test_run_suite_unknown_name():
    with pytest.raises(ValueError):
        run_suite(names=["no_such_check"], trials=5, seed=1)


def test_run_suite_parallel_matches_serial():
    serial = [r.to_payload() for r in run_suite(trials=6, seed=13)]
    parallel = [r.to_payload() for r in run_suite(trials=6, seed=13, jobs=2)]
    assert serial == parallel


def test_reports_payload_and_csv(tmp_path):
    reports = run_suite(names=["derivative_identities", "root_multiplicity"], trials=5, seed=14)
    payload = reports_payload(reports)
    assert set(payload) == {"metadata", "reports"}
    meta = payload["metadata"]
    assert meta["backend"] in ("compiled", "python")
    assert set(meta["elapsed_seconds"]) == {r.check_id for r in reports}
    assert [r["check_id"] for r in payload["reports"]] == [r.check_id for r in reports]

    rows = payload_csv_rows(payload)
    assert rows[0] == ["check_id", "trials", "failures", "seed", "seconds"]
    assert len(rows) == 3
    assert rows[1][0] == "derivative_identities"
    assert rows[1][1] == 5

    jpath = tmp_path / "out.json"
    cpath = tmp_path / "out.csv"
    write_reports_json(reports, str(jpath))
    write_reports_csv(reports, str(cpath))
    loaded = json.loads(jpath.read_text())
    assert [r["check_id"] for r in loaded["reports"]] == [r.check_id for r in reports]
    lines = cpath.read_text().strip().splitlines()
    assert lines[0].startswith("check_id,")
    assert len(lines) == 3
