import json
import subprocess
import sys

import pytest

from reptile_lab import fixtures
from reptile_lab.scenarios import SCENARIOS, Config, emit_figures, run_scenario


@pytest.mark.parametrize("name", SCENARIOS)
def test_scenario_passes(name, reports):
    report = reports(name)
    failing = [c.id for c in report.checkpoints if not c.passed]
    assert report.passed, f"failing checkpoints: {failing}"


def test_anchors_resolve(reports):
    for name in SCENARIOS:
        for cp in reports(name).checkpoints:
            assert fixtures.resolve_anchor(cp.anchor), (name, cp.id, cp.anchor)


@pytest.mark.parametrize("name", ["three-dim", "case-b", "hill"])
def test_report_deterministic(name):
    cfg = Config()
    a = run_scenario(name, cfg).json_lines(include_timing=False)
    b = run_scenario(name, cfg).json_lines(include_timing=False)
    assert a == b


def test_hill_scenario_single_case():
    report = run_scenario("hill", Config(), d=2, m=1)
    assert report.passed
    counts = [c for c in report.checkpoints if c.id == "hill/h1-count/d2m1"]
    assert counts and counts[0].actual == 1


def test_report_json_lines_shape(reports):
    report = reports("case-b")
    lines = report.json_lines().splitlines()
    head = json.loads(lines[0])
    assert head["scenario"] == "case-b" and "config" in head
    for line in lines[1:]:
        entry = json.loads(line)
        assert {"id", "description", "expected", "actual", "pass",
                "provenance", "anchor"} <= set(entry)
        assert entry["provenance"] in ("reference", "trivial", "derived")


def test_emit_figures(tmp_path, reports):
    report = reports("case-b")
    paths = emit_figures(report, str(tmp_path))
    assert len(paths) == len(report.tilings) >= 4
    for p in paths:
        text = open(p).read()
        assert text.startswith("<svg")


def _cli(*args):
    proc = subprocess.run([sys.executable, "-m", "reptile_lab.cli", *args],
                          capture_output=True, text=True)
    return proc


class TestCli:
    def test_run_text(self):
        proc = _cli("run", "three-dim")
        assert proc.returncode == 0
        assert "9/9 checkpoints passed" in proc.stdout

    def test_run_json_and_out(self, tmp_path):
        proc = _cli("run", "case-b", "--format", "json", "--out", str(tmp_path))
        assert proc.returncode == 0
        head = json.loads(proc.stdout.splitlines()[0])
        assert head["pass"] is True
        assert (tmp_path / "report-case-b.jsonl").exists()
        assert any(p.suffix == ".svg" for p in tmp_path.iterdir())

    def test_tile_command(self, tmp_path):
        proc = _cli("tile", "1/3 pi,1/3 pi,1/2 pi", "1/2 pi,2/3 pi,2/3 pi",
                    "--out", str(tmp_path))
        assert proc.returncode == 0
        data = json.loads(proc.stdout)
        assert data["status"] == "found" and data["tiles"] == 5
        assert data["verified"] is True

    def test_tile_exhausted_exit_code(self):
        proc = _cli("tile", "2/9 pi,1/3 pi,1/2 pi", "1/3 pi,1/3 pi,7/9 pi",
                    "--n-max", "8")
        assert proc.returncode == 1
        assert json.loads(proc.stdout)["status"] == "exhausted"

    def test_diagram_command(self, tmp_path):
        path = tmp_path / "one.json"
        path.write_text(json.dumps(fixtures.load("diagrams")["two-indivisible-d"]))
        proc = _cli("diagram", str(path), "auts")
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["order"] == 8
        proc = _cli("diagram", str(path), "gram")
        assert proc.returncode == 2  # abstract labels have no numeric value

    def test_usage_error(self):
        proc = _cli("tile", "not-an-angle", "1/2 pi,1/2 pi,1/2 pi")
        assert proc.returncode == 2

    def test_unknown_scenario(self):
        proc = _cli("run", "nonsense")
        assert proc.returncode == 2
