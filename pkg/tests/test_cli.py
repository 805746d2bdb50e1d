import io
import json

import pytest

from hsemi import formats
from hsemi.cli import main
from hsemi.constructions import paper_example_s7


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def s7_file(tmp_path):
    p = tmp_path / "s7.txt"
    p.write_text(formats.to_text(paper_example_s7()))
    return str(p)


def test_generate_and_analyze_json(capsys, monkeypatch):
    code, text, _ = run(capsys, monkeypatch, ["generate", "--construction", "s7"])
    assert code == 0
    code, out, _ = run(capsys, monkeypatch, ["analyze", "-", "--format", "json"], stdin=text)
    d = json.loads(out)
    assert code == 0 and d["flags"]["completely_inverse"] and d["witnesses"]["E"] == ["0", "e", "f", "g"]


def test_analyze_text(capsys, monkeypatch, s7_file):
    code, out, _ = run(capsys, monkeypatch, ["analyze", s7_file])
    assert code == 0 and "completely_inverse" in out and "H-classes" in out


def test_verify_exit_codes(capsys, monkeypatch, s7_file):
    assert run(capsys, monkeypatch, ["verify", s7_file])[0] == 0
    bad = "4\n0 0 0 0\n0 0 0 1\n0 1 2 1\n0 0 0 3\n"
    code, out, _ = run(capsys, monkeypatch, ["verify", "-", "--theorem", "LEM-HIC-3"], stdin=bad)
    assert code == 1 and "FAILS" in out
    code, out, _ = run(capsys, monkeypatch, ["verify", s7_file, "--theorem", "THEXIST", "--format", "json"])
    assert code == 0 and json.loads(out)[0]["theorem_id"] == "THEXIST"


@pytest.mark.parametrize("stdin", ["2\n0 0\n1 0\n", "2\n0 0\n", "garbage", '{"table": 3}'])
def test_input_errors_exit_2(capsys, monkeypatch, stdin):
    code, _, err = run(capsys, monkeypatch, ["analyze", "-"], stdin=stdin)
    assert code == 2 and err.startswith("hsemi:")


def test_missing_file(capsys, monkeypatch, tmp_path):
    assert run(capsys, monkeypatch, ["analyze", str(tmp_path / "none")])[0] == 2


def test_enumerate(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["enumerate", "--order", "3", "--count-only"])[1] == "113\n"
    out = run(capsys, monkeypatch, ["enumerate", "--order", "3", "--up-to-iso", "--count-only", "--cumulative"])[1]
    assert out.split("\n")[:3] == ["1 1", "2 5", "3 24"]
    out = run(capsys, monkeypatch, ["enumerate", "--order", "2", "--format", "json"])[1]
    assert len(out.splitlines()) == 8


def test_enumerate_sweep(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["enumerate", "--order", "3", "--cumulative", "--sweep"])
    d = json.loads(out)
    assert code == 0 and d["semigroups"] == 122 and d["counterexamples"] == []
    assert run(capsys, monkeypatch, ["enumerate", "--order", "9", "--count-only"])[0] == 2


def test_generate_variants(capsys, monkeypatch):
    out = run(capsys, monkeypatch, ["generate", "--construction", "symmetric-inverse", "--degree", "2"])[1]
    assert formats.parse(out).order == 7
    out = run(capsys, monkeypatch, ["generate", "--construction", "group-adjoin", "--format", "json"])[1]
    assert json.loads(out)["table"] == [[0, 1, 1], [1, 0, 0], [1, 0, 0]]
    out = run(capsys, monkeypatch, ["generate", "--construction", "rectangular-band", "--params", "2", "2"])[1]
    assert formats.parse(out).order == 4
    assert run(capsys, monkeypatch, ["generate", "--construction", "bicyclic"])[0] == 2
    assert run(capsys, monkeypatch, ["generate", "--construction", "symmetric-inverse", "--degree", "6"])[0] == 2


def test_export_round_trip(capsys, monkeypatch, s7_file):
    js = run(capsys, monkeypatch, ["export", s7_file, "--to", "json"])[1]
    back = run(capsys, monkeypatch, ["export", "-"], stdin=js)[1]
    assert back == open(s7_file).read()
