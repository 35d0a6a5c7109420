"""Verdict rule, identity checks, suites, hunt and report rendering."""

import csv
import io
import json
import math

import pytest

from logkernel.catalog import get_identity
from logkernel.config import NumericDefaults
from logkernel.exceptions import BernoulliOverflowError, IdentityNotFoundError, ParameterDomainError
from logkernel.models.verification import CSV_COLUMNS, VerificationResult
from verification.harness import (
    error_verdict,
    format_params,
    judge,
    run_suite,
    select_ids,
    suite_points,
    verify_identity,
)
from verification.hunt import fit_remark, hunt_entry, hunt_table129
from verification.report_generator import ReportGenerator


@pytest.mark.parametrize(
    "lhs,lhs_err,rhs,rhs_err,expected",
    [
        (1.0, 0.0, 1.0, 0.0, "pass"),
        (1.0, 1e-10, 1.0 + 5e-10, 1e-10, "pass"),
        (1.0, 1e-10, 1.0 + 2e-9, 1e-10, "fail"),
        (1.0, 0.0, 1.1, 0.0, "fail"),
        (1.0, 1e-8, 1.0, 0.0, "inconclusive"),
        (math.nan, 0.0, 1.0, 0.0, "inconclusive"),
        (1.0, 0.0, math.inf, 0.0, "inconclusive"),
    ],
)
def test_judge(lhs, lhs_err, rhs, rhs_err, expected):
    assert judge(lhs, lhs_err, rhs, rhs_err, 1e-9) == expected


def test_error_verdicts():
    assert error_verdict(BernoulliOverflowError(41, 40)) == "unsupported_convention"
    assert error_verdict(ValueError("bad")) == "inconclusive"


def test_format_params():
    assert format_params({"b": 1.0, "a": 0.5}) == "a=0.5;b=1.0;"
    assert format_params({}) == ""


def test_main_13_pairs_both_halves_with_the_constant():
    results = verify_identity("main-13")
    assert [r.variant for r in results] == [
        "lhs(0,1) vs 1/24",
        "lhs(0,1) vs (C,1) series k si(k pi)",
        "lhs(1,inf) vs 1/24",
    ]
    assert results[0].verdict == "pass"
    assert results[2].verdict == "pass"
    assert all(r.verdict != "fail" for r in results)


def test_main_15_passes():
    results = verify_identity("main-15")
    assert results[0].verdict == "pass"
    assert abs(results[0].rhs - (0.5772156649015329 / 2 - math.log(2.0) / 2)) <= 1e-15
    assert all(r.verdict != "fail" for r in results)


def test_main_05_at_half():
    (result,) = verify_identity("main-05", {"a": 0.5})
    assert result.verdict == "pass"
    assert result.abs_diff <= 1e-10
    assert result.rel_diff == pytest.approx(result.abs_diff / math.pi)
    assert result.elapsed_ms == 0


def test_trig_lemma_claim_fails_where_exact_value_passes():
    claimed, exact = verify_identity("lemma-kummer-trig", {"k": 1})
    assert claimed.verdict == "fail"
    assert claimed.rhs == -2.0
    assert exact.verdict == "pass"
    assert abs(exact.rhs - 1 / (3 * math.pi)) <= 1e-15


@pytest.mark.parametrize(
    "identity_id,params,label",
    [
        ("lemma-kummer", {"y": 0.3}, "lhs=routine[kummer]"),
        ("lemma-digamma-reflection", {"z": 0.25}, "lhs=closed"),
        ("lemma-log-bernoulli-sum", {}, "lhs=series[tail_corrected]"),
        ("main-05", {"a": 1.0}, "lhs=quad"),
    ],
)
def test_notes_name_the_lhs_method(identity_id, params, label):
    (result,) = verify_identity(identity_id, params)
    notes = result.mode_notes.split("; ")
    assert label in notes
    if label != "lhs=quad":
        assert "lhs=quad" not in notes


def test_verify_identity_checks_the_domain():
    with pytest.raises(ParameterDomainError):
        verify_identity("main-03", {"a": math.pi})
    with pytest.raises(IdentityNotFoundError):
        verify_identity("main-99")


def test_remark_notes_carry_the_fitted_constant():
    results = verify_identity("remark-n", {"n": 2})
    assert len(results) == 2
    assert all("fitted c=" in r.mode_notes for r in results)


def test_empty_selection_runs_nothing():
    assert run_suite([]) == []


def test_suite_on_main_06():
    results = run_suite(["main-06"])
    assert len(results) == 3
    assert [r.verdict for r in results] == ["pass", "pass", "pass"]


def test_suite_results_are_sorted():
    results = run_suite(["main-05"], a_grid=(2.0, 0.5, 1.0), max_workers=3)
    assert [r.params["a"] for r in results] == [0.5, 1.0, 2.0]


def test_suite_rejects_unknown_ids():
    with pytest.raises(IdentityNotFoundError):
        run_suite(["no-such-id"])


def test_select_ids():
    assert select_ids(["main-03..main-05"]) == ["main-03", "main-04", "main-05"]
    assert select_ids(["main-05..main-03"]) == ["main-03", "main-04", "main-05"]
    assert len(select_ids(["appendix"])) == 17
    assert select_ids(["main-13", "main-02", "main-13"]) == ["main-02", "main-13"]
    with pytest.raises(IdentityNotFoundError):
        select_ids(["no-such-id"])
    with pytest.raises(IdentityNotFoundError):
        select_ids(["main-01..main-99"])


def test_suite_points_skip_the_excluded_values():
    points = suite_points(get_identity("main-03"), NumericDefaults.A_GRID)
    assert len(points) == 6
    assert {"a": math.pi} not in points
    assert suite_points(get_identity("main-13"), NumericDefaults.A_GRID) == [{}]
    assert len(suite_points(get_identity("lemma-kummer-trig"), NumericDefaults.A_GRID)) == 6


@pytest.mark.parametrize("identity_id", ["appendix-02", "appendix-06"])
def test_hunt_confirms_correct_entries(identity_id):
    entry = hunt_entry(get_identity(identity_id))
    assert entry.summary == "closed form: pass"
    assert not entry.uses_odd_bernoulli
    assert all(point.lhs is not None for point in entry.points)


def test_json_report_round_trips():
    results = verify_identity("main-05", {"a": 1.0})
    document = json.loads(ReportGenerator("json").render_results(results))
    assert [VerificationResult(**d) for d in document] == results


def test_variant_is_in_json_and_leads_the_csv_notes():
    results = verify_identity("main-13")
    document = json.loads(ReportGenerator("json").render_results(results))
    assert [d["variant"] for d in document] == [r.variant for r in results]
    assert "variant" not in CSV_COLUMNS
    rows = list(csv.DictReader(io.StringIO(ReportGenerator("csv").render_results(results))))
    assert [row["mode_notes"].split("; ")[0] for row in rows] == [r.variant for r in results]


def test_csv_report_columns():
    results = verify_identity("main-05", {"a": 1.0})
    rows = list(csv.reader(io.StringIO(ReportGenerator("csv").render_results(results))))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[1][0] == "main-05"
    assert rows[1][1] == "a=1.0;"
    assert rows[1][CSV_COLUMNS.index("verdict")] == "pass"


def test_table_report_summary_line():
    results = verify_identity("main-05", {"a": 1.0})
    text = ReportGenerator("table").render_results(results)
    assert text.rstrip().endswith("1 checks: pass=1")


@pytest.mark.slow
def test_remark_fit_covers_both_halves():
    fits = fit_remark()
    assert len(fits) == 10
    assert {fit.interval for fit in fits} == {"(0,1)", "(1,inf)"}
    assert all(fit.fitted_c is not None for fit in fits)


@pytest.mark.slow
def test_full_suite_covers_the_registry(registry_ids):
    results = run_suite()
    assert {r.identity_id for r in results} == set(registry_ids)


@pytest.mark.slow
def test_table_hunt():
    report = hunt_table129()
    assert [entry.entry for entry in report.entries] == list(range(1, 18))
    for number in (2, 6, 7, 9, 13, 14):
        entry = report.entries[number - 1]
        assert all(v == "pass" for p in entry.points for v in p.verdicts.values()), entry.summary
    assert report.remark
