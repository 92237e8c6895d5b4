import json

import pytest

from commands import EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE, EXIT_VIOLATION, main
from commands import cli
from nets import load_net, n3_family, save_net
from theorems import TheoremViolated


@pytest.fixture
def net_file(tmp_path, hyperbola_11_5):
    path = tmp_path / "hyperbola.json"
    save_net(hyperbola_11_5, path)
    return str(path)


def _last_json(text):
    return json.loads(text.strip().splitlines()[-1])


def test_construct_then_verify(tmp_path, capsys):
    path = tmp_path / "net.json"
    assert main(["construct", "--family", "hyperbola", "--p", "11", "--subgroup-order", "5", "-o", str(path)]) == EXIT_OK
    assert load_net(path).n == 5
    capsys.readouterr()
    assert main(["verify", str(path), "--json"]) == EXIT_OK
    payload = _last_json(capsys.readouterr().out)
    assert payload["axioms"]["passed"]
    assert payload["regularity"]["kind"] == "irregular_one_line"


def test_construct_prints_the_net(capsys):
    assert main(["construct", "--family", "pasch", "--p", "5"]) == EXIT_OK
    payload = _last_json(capsys.readouterr().out)
    assert len(payload["A"]) == 2


def test_theorem1_check(net_file, capsys):
    assert main(["theorem", "--check", "thm1", net_file, "--json"]) == EXIT_OK
    assert _last_json(capsys.readouterr().out)["passed"]


def test_n3_check(capsys):
    assert main(["theorem", "--check", "n3", "--p", "7", "--a", "1", "--b", "3", "--c", "2", "--json"]) == EXIT_OK
    report = _last_json(capsys.readouterr().out)
    assert report["b_collinear"] and not report["c_collinear"]


def test_precondition_failures(tmp_path, hyperbola_13_4, gf7):
    small = tmp_path / "small.json"
    save_net(hyperbola_13_4, small)
    assert main(["theorem", "--check", "converse", str(small), "--json"]) == EXIT_PRECONDITION

    scattered = tmp_path / "n3.json"
    save_net(n3_family(gf7, 1, 2, 4), scattered)
    assert main(["theorem", "--check", "redei", str(scattered), "--json"]) == EXIT_PRECONDITION


def test_usage_errors(tmp_path):
    assert main(["construct", "--family", "ellipse", "--p", "7"]) == EXIT_USAGE
    assert main(["verify", str(tmp_path / "missing.json")]) == EXIT_USAGE
    assert main(["theorem", "--check", "thm1"]) == EXIT_USAGE
    assert main(["construct", "--family", "hyperbola", "--p", "7"]) == EXIT_USAGE


def test_violation_writes_the_counterexample(net_file, capsys, monkeypatch):
    def broken(net):
        raise TheoremViolated("forced", {"order": net.n})

    monkeypatch.setitem(cli.NET_CHECKS, "thm1", broken)
    assert main(["theorem", "--check", "thm1", net_file, "--json"]) == EXIT_VIOLATION
    captured = capsys.readouterr()
    payload = _last_json(captured.out)
    assert payload["error"] == "TheoremViolated"
    assert payload["counterexample"] == {"order": 5}
    assert "forced" in captured.err


def test_search_ends_with_a_summary(capsys):
    assert main(["search", "--p", "3", "--n", "3", "--frame", "arc"]) == EXIT_OK
    summary = _last_json(capsys.readouterr().out)
    assert summary["nets"] == 0
    assert summary["complete"]


def test_latin(tmp_path, parabola_16_4, capsys):
    path = tmp_path / "parabola.json"
    save_net(parabola_16_4, path)
    assert main(["latin", str(path), "--json"]) == EXIT_OK
    payload = _last_json(capsys.readouterr().out)
    assert payload["isotopy"] == "klein"
    assert len(payload["rows"]) == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["search", "--p", "5", "--n", "3", "--frame", "arc"],
        ["theorem", "--check", "waterhouse", "--p", "5", "--json"],
        ["construct", "--family", "circle", "--p", "11", "--subgroup-order", "6"],
    ],
)
def test_output_is_reproducible(argv, capsys):
    outputs = []
    for _ in range(2):
        assert main(argv) == EXIT_OK
        outputs.append(capsys.readouterr().out)
    assert outputs[0]
    assert outputs[0] == outputs[1]
