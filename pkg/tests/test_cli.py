import csv
import io
import json

import pytest

from cli import RunConfig, Settings, build_parser
from cli.commands import EXIT_INPUT_ERROR, EXIT_OK, EXIT_VALIDATION_FAILED
from main import main
from specfun import InputValidationError


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def _config(argv):
    return RunConfig.from_args(build_parser().parse_args(argv), Settings.from_env())


def test_cdf_square_case_uses_closed_form(capsys):
    assert main(["cdf", "--m", "2", "--n", "2", "--p", "2", "--t", "5"]) == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    assert len(rows) == 1
    assert rows[0]["method"] == "Corollary2"
    assert 0.0 < float(rows[0]["value"]) < 1.0


def test_cdf_single_sensor_is_one(capsys):
    assert main(["cdf", "--m", "1", "--n", "1", "--p", "1", "--t", "2"]) == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    assert float(rows[0]["value"]) == 1.0


def test_cdf_grid_is_monotone(capsys):
    assert main(["cdf", "--m", "3", "--n", "4", "--p", "5", "--t", "1.5", "3", "10", "100"]) == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    values = [float(row["value"]) for row in rows]
    assert values == sorted(values)
    assert {row["method"] for row in rows} == {"Theorem1"}


@pytest.mark.parametrize("argv", [
    ["cdf", "--m", "2", "--n", "2", "--p", "2", "--t", "0.5"],
    ["threshold", "--m", "2", "--n", "2", "--p", "2", "--alpha", "1.5"],
    ["cdf", "--m", "3", "--n", "2", "--p", "3", "--t", "2"],
    ["cdf", "--m", "2", "--n", "2", "--p", "2"],
    ["roc", "--m", "2", "--n", "2", "--p", "2", "--gamma", "-1", "--alpha", "0.1"],
    ["roc", "--m", "2", "--n", "2", "--p", "2", "--alpha", "0.2", "0.1"],
    ["cdf", "--m", "2", "--n", "2", "--p", "2", "--t", "2", "--method", "lookup"],
    ["simulate", "--experiment", "robustness", "--m", "2", "--n", "2", "--p", "2", "--alpha", "0.1", "0.2"],
])
def test_invalid_input_exits_with_2(argv):
    assert main(argv) == EXIT_INPUT_ERROR


def test_plot_script_requires_output():
    with pytest.raises(InputValidationError):
        _config(["cdf", "--m", "2", "--n", "2", "--p", "2", "--t", "2", "--plot-script", "cdf.gp"])


def test_config_uses_environment_defaults(monkeypatch):
    monkeypatch.setenv("SCNDET_SEED", "42")
    monkeypatch.setenv("SCNDET_DRAWS", "123")
    config = _config(["cdf", "--m", "2", "--n", "2", "--p", "2", "--t", "2"])
    assert config.seed == 42
    assert config.draws == 123

    config = _config(["cdf", "--m", "2", "--n", "2", "--p", "2", "--t", "2", "--seed", "7"])
    assert config.seed == 7


def test_malformed_environment_falls_back(monkeypatch):
    monkeypatch.setenv("SCNDET_DRAWS", "many")
    monkeypatch.setenv("SCNDET_LOG_LEVEL", "chatty")
    settings = Settings.from_env()
    assert settings.draws == 100_000
    assert settings.log_level == "INFO"


def test_threshold_at_half(capsys):
    assert main(["threshold", "--m", "2", "--n", "2", "--p", "2", "--alpha", "0.5"]) == EXIT_OK
    row = _rows(capsys.readouterr().out)[0]
    assert float(row["mu_th"]) > 1.0
    assert float(row["p_f"]) == pytest.approx(0.5, abs=1e-6)


def test_threshold_outside_closed_forms_uses_simulation(capsys):
    argv = ["threshold", "--m", "2", "--n", "2", "--p", "8", "--alpha", "0.1", "--draws", "20000", "--seed", "5",
            "--threads", "1"]
    assert main(argv) == EXIT_OK
    row = _rows(capsys.readouterr().out)[0]
    assert row["method"] == "MonteCarlo"
    assert float(row["mu_th"]) > 1.0
    assert float(row["p_f"]) == pytest.approx(0.1, abs=1e-9)


def test_help_describes_sample_roles(capsys):
    with pytest.raises(SystemExit):
        main(["cdf", "--help"])
    lines = capsys.readouterr().out.splitlines()
    assert any(line.strip().startswith("--n N") and "Noise-only" in line for line in lines)
    assert any(line.strip().startswith("--p P") and "Signal-plus-noise" in line for line in lines)


def test_json_output_schema(capsys):
    assert main(["cdf", "--m", "2", "--n", "3", "--p", "3", "--t", "2", "4", "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["command"] == "cdf"
    assert document["schema_version"] == 1
    assert document["columns"][:5] == ["m", "n", "p", "gamma", "t"]
    assert len(document["rows"]) == 2
    assert all(len(row) == len(document["columns"]) for row in document["rows"])


def test_simulate_output_is_reproducible(tmp_path):
    paths = [tmp_path / "first.csv", tmp_path / "second.csv"]
    for path, threads in zip(paths, ["1", "2"]):
        argv = ["simulate", "--experiment", "cdf", "--m", "2", "--n", "3", "--p", "3", "--t", "2", "5",
                "--draws", "3000", "--seed", "11", "--threads", threads, "--output", str(path)]
        assert main(argv) == EXIT_OK
    assert paths[0].read_bytes() == paths[1].read_bytes()

    rows = _rows(paths[0].read_text())
    assert [row["method"] for row in rows] == ["MonteCarlo", "MonteCarlo"]
    assert all(row["exact_method"] == "Theorem1" for row in rows)


def test_plot_script_reads_data_file(tmp_path):
    data = tmp_path / "cdf.csv"
    script = tmp_path / "cdf.gp"
    argv = ["cdf", "--m", "2", "--n", "2", "--p", "2", "--t", "2", "5",
            "--output", str(data), "--plot-script", str(script)]
    assert main(argv) == EXIT_OK
    text = script.read_text()
    assert str(data) in text
    assert "using 5:6" in text
    assert 'set datafile separator ","' in text


def test_roc_from_thresholds(capsys):
    argv = ["roc", "--m", "2", "--n", "2", "--p", "2", "--gamma", "2", "--mu", "2", "5", "20"]
    assert main(argv) == EXIT_OK
    rows = _rows(capsys.readouterr().out)
    p_f = [float(row["p_f"]) for row in rows]
    p_d = [float(row["p_d"]) for row in rows]
    assert p_f == sorted(p_f)
    assert all(d >= f for d, f in zip(p_d, p_f))


def test_validate_fails_with_injected_tolerance(capsys):
    argv = ["validate", "--quick", "--threads", "1", "--inject-tolerance", "1e-12"]
    assert main(argv) == EXIT_VALIDATION_FAILED
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 10
    assert any(line.startswith("FAIL") for line in lines)
