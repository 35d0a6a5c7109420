"""Command-line front end: exit codes, formats and argument parsing."""

import json
import math

import pytest

from logkernel.config import get_settings
from logkernel.exceptions import ConfigurationError, UsageError
from logkernel.specfun import EULER_GAMMA
from verification.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, parse_number, parse_param


@pytest.mark.parametrize(
    "text,expected",
    [
        ("pi", math.pi),
        ("2pi", 2 * math.pi),
        ("-pi/2", -math.pi / 2),
        ("0.5*pi/4", 0.5 * math.pi / 4),
        ("PI", math.pi),
        ("1e-3", 1e-3),
        (" 2.5 ", 2.5),
    ],
)
def test_parse_number(text, expected):
    assert parse_number(text) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("text", ["abc", "inf", "nan", "pi*pi"])
def test_parse_number_rejects(text):
    with pytest.raises(UsageError):
        parse_number(text)


def test_parse_param():
    assert parse_param("s=2") == ("s", 2)
    assert parse_param("a=pi") == ("a", math.pi)
    assert parse_param("a=1.0") == ("a", 1.0)
    with pytest.raises(UsageError):
        parse_param("novalue")


def test_verify_passing_identity(capsys):
    assert main(["verify", "--ids", "main-13"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "main-13" in out
    assert "checks:" in out


def test_verify_unknown_id_is_a_usage_error(capsys):
    assert main(["verify", "--ids", "no-such-id"]) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("error:")


def test_verify_false_claim_exits_with_failure(capsys):
    assert main(["verify", "--ids", "lemma-kummer-trig", "--format", "json"]) == EXIT_FAIL
    results = json.loads(capsys.readouterr().out)
    assert {r["verdict"] for r in results} == {"pass", "fail"}


@pytest.mark.parametrize("argv", [["verify", "--tol", "abc"], ["verify", "--tol", "0"], ["frobnicate"]])
def test_bad_arguments(argv, capsys):
    assert main(argv) == EXIT_USAGE


def test_verify_a_grid_and_output_file(tmp_path, capsys):
    out = tmp_path / "reports" / "main05.csv"
    code = main(["verify", "--ids", "main-05", "--a", "1,pi/2", "--format", "csv", "--out", str(out)])
    assert code == EXIT_OK
    assert capsys.readouterr().out == ""
    lines = out.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 3
    assert lines[1].startswith("main-05,a=1.0;")


def test_json_output_is_reproducible(capsys):
    argv = ["verify", "--ids", "main-05", "--a", "0.5,2", "--format", "json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    second = capsys.readouterr().out
    assert first == second


def test_eval_digamma(capsys):
    assert main(["eval", "--fn", "digamma", "--x", "1", "--format", "json"]) == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert record["fn"] == "digamma"
    assert abs(record["value"] + EULER_GAMMA) <= 1e-12


def test_eval_ei_imag(capsys):
    assert main(["eval", "--fn", "ei_imag", "--x", "pi", "--format", "json"]) == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert set(record) == {"fn", "x", "re", "im"}


def test_eval_errors(capsys):
    assert main(["eval", "--fn", "nope", "--x", "1"]) == EXIT_USAGE
    assert main(["eval", "--fn", "Ci"]) == EXIT_USAGE
    assert main(["eval", "--fn", "Ci", "--x", "-1"]) == EXIT_USAGE
    assert main(["eval", "--fn", "polygamma", "--order", "5", "--x", "1"]) == EXIT_USAGE


def test_sum_series(capsys):
    argv = ["sum", "--series", "alternating_power", "--mode", "alternating_accelerated", "--format", "json"]
    assert main(argv) == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert record["mode"] == "alternating_accelerated"
    assert abs(record["value"] - math.log(2.0)) <= 1e-9


def test_sum_with_parameter(capsys):
    argv = ["sum", "--series", "table_bernoulli", "--param", "a=1", "--format", "json"]
    assert main(argv) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["value"] == 0.5


def test_sum_errors(capsys):
    assert main(["sum", "--series", "no_such_series"]) == EXIT_USAGE
    assert main(["sum", "--series", "grandi", "--mode", "direct"]) == EXIT_USAGE


def test_registry_dump(capsys, registry):
    assert main(["registry", "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert len(document) == len(registry)
    assert document[0]["id"] == "main-01"


@pytest.fixture
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def test_invalid_environment_is_a_configuration_error(monkeypatch, fresh_settings, capsys):
    monkeypatch.setenv("LOGKERNEL_MAX_WORKERS", "0")
    with pytest.raises(ConfigurationError) as excinfo:
        get_settings()
    assert excinfo.value.setting == "LOGKERNEL_MAX_WORKERS"
    assert main(["registry"]) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("error: Configuration error")
