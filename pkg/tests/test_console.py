import json

import pytest
from click.testing import CliRunner

from wogtoric.console import cli, EXIT_INVALID, EXIT_UNCERTIFIED
from builders import data_path


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, [str(a) for a in args])

    return invoke


def test_generators(run):
    result = run("generators", data_path("eight_cycle_d1.graph"))
    assert result.exit_code == 0
    assert result.output.splitlines() == ["e1^1 e3^16 e5^8 e7^2 - e2^4 e4^16 e6^4 e8^1"]

def test_generators_zero(run):
    result = run("generators", data_path("tree.graph"))
    assert result.exit_code == 0
    assert result.output.strip() == "zero ideal"

def test_generators_json(run):
    result = run("generators", "--json", data_path("three_cycles_d2.graph"))
    data = json.loads(result.output)
    assert data["kind"] == "basis"
    assert data["method"] == "oracle saturation"
    assert data["complete"] is True
    assert len(data["generators"]) == 2

def test_generators_budget(run):
    result = run("generators", "--bound", 1, data_path("three_cycles_d1.graph"))
    assert result.exit_code == EXIT_UNCERTIFIED

def test_zero(run):
    result = run("zero", data_path("triangle.graph"))
    assert result.output.strip() == "zero (odd cycle)"

    result = run("zero", "--json", data_path("eight_cycle_d1.graph"))
    assert json.loads(result.output) == dict(zero=False, reason=None)

def test_missing_file(run, tmp_path):
    result = run("zero", tmp_path / "absent.graph")
    assert result.exit_code == EXIT_INVALID

def test_malformed_file(run, tmp_path):
    path = tmp_path / "bad.graph"
    path.write_text("vertices 3\nweights 1 2\n")
    result = run("generators", path)
    assert result.exit_code == EXIT_INVALID

def test_bad_config(run, tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("threads: 4\n")
    result = run("--config", path, "zero", data_path("triangle.graph"))
    assert result.exit_code == EXIT_INVALID

def test_config_budget(run, tmp_path):
    path = tmp_path / "tight.yaml"
    path.write_text("oracle:\n  max_spairs: 1\n")
    result = run("--config", path, "generators", data_path("three_cycles_d1.graph"))
    assert result.exit_code == EXIT_UNCERTIFIED

def test_matrix(run):
    result = run("matrix", data_path("triangle.graph"))
    assert [line.split() for line in result.output.splitlines()] == [
        ["1", "0", "2"],
        ["3", "1", "0"],
        ["0", "2", "1"],
    ]

def test_verify(run):
    result = run("verify", data_path("eight_cycle_d1.graph"), data_path("eight_cycle_d1.binomials"))
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].endswith(": kernel yes, ideal yes")
    assert lines[1].endswith(": kernel yes, ideal yes")
    assert lines[2] == "e1^1 - e2^1 : kernel no, ideal no"

def test_classify(run):
    result = run("classify", data_path("shared_edge.graph"))
    assert result.exit_code == 0
    assert "two cycles sharing a path (cycle rank 2)" in result.output
    assert sum(1 for line in result.output.splitlines() if line.startswith("  cycle ")) == 3

def test_classify_json(run, shared_edge):
    result = run("classify", "--json", data_path("whiskered_square.graph"))
    report = json.loads(result.output)
    assert len(report) == 1
    assert report[0]["structure"] == "unicyclic"
    assert report[0]["pruned"] == [5]
    assert report[0]["cycles"][0]["balanced"] is True

    report = json.loads(run("classify", "--json", data_path("shared_edge.graph")).output)
    assert [c["balanced"] for c in report[0]["cycles"]].count(True) == 1

def test_dot(run):
    result = run("dot", data_path("triangle.graph"))
    assert result.output.startswith("digraph")
    assert 'x3 -> x1 [label="e3"];' in result.output
