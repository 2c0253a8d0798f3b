import csv
import io
import json
from dataclasses import replace

import pytest

from app_config import EntropyConfig, apply_config, config
from interfaces import cli
from validation import CheckLevel, CheckResult, ValidationReport


@pytest.fixture
def restore_config():
    saved = replace(config)
    yield
    apply_config(saved)


def test_compute_prints_ln2(capsys):
    assert cli.main(["compute", "--h", "0", "-L", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("L,h,alpha")
    fields = lines[1].split(",")
    assert fields[:5] == ["1", "0", "1", "2", "0.69314718056"]
    assert fields[-1] == "largeL"


def test_compute_json(capsys):
    assert cli.main(["compute", "--h", "1.99", "-L", "1", "--format", "json"]) == 0
    (row,) = json.loads(capsys.readouterr().out)
    assert row["regime"] == "smallL"
    assert row["s_small_block"] is not None


def test_compute_renyi_to_file(tmp_path, capsys):
    out = tmp_path / "nested" / "row.csv"
    assert cli.main(["compute", "--h", "0.5", "-L", "20", "--kind", "renyi", "--alpha", "2",
                     "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    lines = out.read_text().splitlines()
    assert len(lines) == 2
    assert lines[1].split(",")[2] == "2"


def test_domain_error_exit_code(capsys):
    assert cli.main(["compute", "--h", "3", "-L", "5", "--format", "json"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["error_type"] == "DomainError"


def test_domain_error_in_csv_mode(capsys):
    assert cli.main(["compute", "--h", "3", "-L", "5"]) == 1
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == ["error", "error_type"]
    assert rows[1][1] == "DomainError"
    assert rows[1][0] != ""


def test_bad_alpha_exit_code():
    assert cli.main(["compute", "--h", "0", "-L", "5", "--kind", "renyi", "--alpha", "-1"]) == 1


def test_malformed_list_exit_code(capsys):
    assert cli.main(["scan", "--lengths", "10,abc", "--fields", "0"]) == 1
    assert capsys.readouterr().out.startswith("error,error_type\n")


def test_scan_json(capsys):
    assert cli.main(["scan", "--lengths", "10,20", "--fields", "0,1", "--format", "json",
                     "--workers", "2"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [(r["L"], r["h"]) for r in rows] == [(10, 0.0), (10, 1.0), (20, 0.0), (20, 1.0)]


def test_scan_outputs_flag(capsys):
    assert cli.main(["scan", "--lengths", "10", "--fields", "0", "--outputs", "exact"]) == 0
    fields = capsys.readouterr().out.splitlines()[1].split(",")
    assert fields[4] != ""
    assert fields[5:8] == ["", "", ""]


def test_validation_failure_exit_code(monkeypatch, capsys):
    failing = ValidationReport(level=CheckLevel.FAST, results=[
        CheckResult(name="always_fails", passed=False, measured=1.0, tolerance=0.5),
    ])
    monkeypatch.setattr(cli, "run_validate", lambda level: failing)
    assert cli.main(["validate", "--format", "json"]) == 3
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is False


def test_validation_success_exit_code(monkeypatch, capsys):
    passing = ValidationReport(level=CheckLevel.FAST, results=[
        CheckResult(name="always_passes", passed=True, measured=0.0, tolerance=1.0),
    ])
    monkeypatch.setattr(cli, "run_validate", lambda level: passing)
    assert cli.main(["validate"]) == 0
    assert "1/1 checks passed" in capsys.readouterr().out


def test_config_file_is_applied(tmp_path, restore_config, capsys):
    path = tmp_path / "entropy.yaml"
    path.write_text("spectrum:\n  max_order: 50\n")
    assert cli.main(["--config", str(path), "compute", "--h", "0", "-L", "100"]) == 1
    assert config.spectrum.max_order == 50


def test_bad_config_file(tmp_path, restore_config):
    path = tmp_path / "entropy.yaml"
    path.write_text("spectrum:\n  max_ordr: 50\n")
    assert cli.main(["--config", str(path), "compute", "--h", "0", "-L", "1"]) == 1
    assert config.spectrum.max_order == EntropyConfig().spectrum.max_order
