import json

import pytest

from srpowers.canonical import canonical_form
from srpowers.cli import Command, UsageError, main, parse_args, parse_facets, run
from srpowers.complex import ComplexError, from_facets, parse_json
from srpowers.fixtures import fixture_dir


def hept_path():
    return str(fixture_dir() / "heptagon.json")


def run_json(capsys, argv):
    status = main(argv + ["--json"])
    out = capsys.readouterr().out
    return status, json.loads(out), out


def test_parse_args_examples():
    cmd = parse_args(["equality", "--file", hept_path(), "--m", "3"])
    assert isinstance(cmd, Command) and cmd.verb == "equality" and cmd.m == 3
    cmd = parse_args(["verify", "--theorem", "3.8"])
    assert cmd.verb == "verify" and cmd.theorem == "3.8"
    with pytest.raises(UsageError):
        parse_args(["equality", "--m", "0", "--file", hept_path()])
    with pytest.raises(UsageError):
        parse_args(["equality", "--m", "2"])
    with pytest.raises(UsageError):
        parse_args(["check", "--theorem", "2.6", "--facets", "1 2 3; 3 4 5"])
    with pytest.raises(SystemExit):
        parse_args(["frobnicate"])


def test_parse_facets():
    assert parse_facets("1 2 3; 1,2,4") == from_facets(4, [[1, 2, 3], [1, 2, 4]])
    with pytest.raises(ComplexError):
        parse_facets("1 x 3")
    with pytest.raises(ComplexError):
        parse_facets(" ; ")


def test_heptagon_equality(capsys):
    status, payload, _ = run_json(capsys, ["equality", "--file", hept_path(), "--m", "3"])
    assert status == 0 and payload["report"]["route"] == "2.5"
    assert payload["schema"] == "srpowers/1"
    status, payload, _ = run_json(capsys, ["equality", "--file", hept_path(), "--m", "4"])
    assert status == 1 and payload["report"]["cover_witness"] == [1] * 7
    status, payload, _ = run_json(capsys, ["equality", "--file", hept_path(), "--m", "4", "--brute-force"])
    assert status == 1 and payload["report"]["witness"] == [1] * 7


def test_exit_codes(capsys, tmp_path):
    assert main(["equality", "--m", "0", "--file", hept_path()]) == 2
    assert main(["equality", "--m", "2", "--file", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["equality", "--m", "2", "--file", str(bad)]) == 2
    assert main(["cm", "--facets", "1 2 3", "--field", "4"]) == 2
    assert main(["check", "--theorem", "2.1", "--facets", "1 2 3; 1 2 4; 1 2 5; 3 4 5"]) == 1
    assert main(["check", "--theorem", "2.1", "--facets", "1 2 3; 3 4 5"]) == 0
    assert main(["check", "--theorem", "2.2", "--facets", "1 2 3; 3 4 5"]) == 2
    capsys.readouterr()


def test_json_is_deterministic(capsys):
    argv = ["check", "--file", hept_path(), "--theorem", "3.4"]
    outs = [run_json(capsys, argv)[2] for _ in range(2)]
    assert outs[0] == outs[1]
    argv = ["verify", "--theorem", "3.9", "--max-n", "6"]
    outs = [run_json(capsys, argv)[2] for _ in range(2)]
    assert outs[0] == outs[1] and "elapsed" not in outs[0]


def test_verify_small(capsys):
    status, payload, _ = run_json(capsys, ["verify", "--theorem", "3.9", "--max-n", "6"])
    assert status == 0
    assert [len(r["survivors"]) for r in payload["report"]["results"]] == [2, 1]
    assert main(["verify", "--theorem", "3.9", "--max-n", "4"]) == 2
    capsys.readouterr()


def test_enumerate_round_trip(capsys):
    status, payload, _ = run_json(capsys, ["enumerate", "--n", "5"])
    assert status == 0 and payload["report"]["count"] == 29
    forms = set()
    for item in payload["report"]["complexes"]:
        forms.add(canonical_form(parse_json(json.dumps(item))))
    assert len(forms) == 29


def test_text_output(capsys):
    assert main(["cm", "--file", hept_path(), "--m", "2"]) == 1
    out = capsys.readouterr().out
    assert out.startswith("cm: fails")
    assert main(["enumerate", "--n", "5", "--pruner", "eq2"]) == 0
    assert "complexes on 5 vertices" in capsys.readouterr().out


def test_run_direct():
    cmd = parse_args(["check", "--theorem", "3.7", "--m", "2", "--facets", "1 2; 2 3; 3 4; 4 1"])
    status, report = run(cmd)
    assert status == 0 and report["theorem"] == "3.7"
