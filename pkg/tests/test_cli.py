import json

import pytest

from zariski.cli import SCHEMA, main
from zariski.fixtures import load_fixture


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def structured(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "structured")
    doc = json.loads(out)
    assert doc["schema"] == SCHEMA
    assert doc["status"] == ("ok" if code == 0 else "fail")
    return code, doc


def test_add_text(capsys):
    code, out, _ = run(capsys, "add", "P12 + P31")
    assert code == 0
    assert out.strip() == "(5/4*t^2 - 2*t + 3, 5/8*t^3 - 6*t^2 + 31/2*t - 12)"


def test_add_structured(capsys):
    code, doc = structured(capsys, "add", "2*P12")
    assert code == 0 and doc["command"] == "add"
    assert doc["result"]["point"]["x"] == "t^2 + 36/25"


def test_add_literal_and_negation(capsys):
    code, out, _ = run(capsys, "add", "P12", "-", "P12")
    assert code == 0 and out.strip() == "O"
    code, out, _ = run(capsys, "add", "(t^2, 0)", "+", "(t^2, 0)")
    assert code == 0 and out.strip() == "O"


def test_mumford(capsys):
    code, out, _ = run(capsys, "mumford", "P12", "P31", "--groebner")
    assert code == 0
    assert "u = x^2 + (-14*t + 24)*x + (45*t^2 - 144*t + 108)" in out
    assert "groebner" in out


def test_groebner_fixture(capsys):
    code, doc = structured(capsys, "groebner", "paper-I3+", "--primitive")
    assert code == 0
    assert doc["result"]["dimension"] == "1"
    assert sorted(doc["result"]["basis"]) == ["t - 4", "x - 15", "y + 6"]


def test_groebner_inline(capsys):
    code, out, _ = run(capsys, "groebner", "--gens", "x*y - 1", "y^2 - x", "--vars", "x,y", "--order", "x>y")
    assert code == 0
    assert "-y^2 + x" in out and "y^3 - 1" in out and "dimension 3" in out


def test_split_and_lattice_agree(capsys):
    _, split = structured(capsys, "split")
    _, lat = structured(capsys, "lattice")
    s = {k: tuple(v["type"]) for k, v in split["result"].items()}
    assert [tuple(v) for v in s.values()] == [(0, 2), (0, 2), (1, 1), (1, 1)]
    assert json.dumps(lat["result"]).count("[1, 1]") == 2


def test_comb_exit_codes(capsys, tmp_path):
    assert run(capsys, "comb", "paper-C2")[0] == 0
    doc = load_fixture("paper-C1")
    doc["components"][3]["poly"] = "x - t - 100"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, rep = structured(capsys, "comb", str(path))
    assert code == 1
    assert rep["result"]["verdict"].startswith("deviation:")


def test_family(capsys):
    code, out, _ = run(capsys, "family", "C3a", "2")
    assert code == 0 and out.strip() == "20*x^2 + 32*t^2 - 84*x - 216"
    code, _, err = run(capsys, "family", "D3b", "2")
    assert code == 2 and "degenerate" in err
    code, out, _ = run(capsys, "family", "D3b", "2", "--allow-degenerate")
    assert code == 0
    code, out, _ = run(capsys, "family", "D3b")
    assert "b in {-4/5, 2}" in out


def test_pi1(capsys):
    code, doc = structured(capsys, "pi1", "pi1-C3-script")
    assert code == 0
    assert doc["result"]["rank"] == 3 and doc["result"]["invariant_factors"] == []
    assert doc["result"]["verdict"] == "PASS"
    code, doc = structured(capsys, "pi1", "pi1-C1")
    assert code == 0 and "verdict" not in doc["result"]


def test_reproduce_scope(capsys):
    code, doc = structured(capsys, "reproduce", "splitting")
    assert code == 0
    checks = doc["result"]["checks"]
    assert len(checks) == 17
    assert all(c["verdict"] == "PASS" for c in checks)


@pytest.mark.parametrize("argv", [["add", "P99"], ["comb", "missing-fixture"], ["add", "P12 +"],
                                  ["groebner", "--gens", "x", "--vars", "x,y", "--order", "x>z"],
                                  ["family", "nope", "1"]])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith(f"zariski {argv[0]}: error:")


def test_usage_error_from_argparse(capsys):
    with pytest.raises(SystemExit) as info:
        main(["reproduce", "everything"])
    assert info.value.code == 2


def test_global_format_flag(capsys):
    code, out, _ = run(capsys, "--format", "structured", "lattice")
    assert json.loads(out)["command"] == "lattice"
