import json

import pytest

from zariski.data import expected_points, load_arrangement, load_curve, load_families, load_presentation
from zariski.fixtures import ENV_VAR, FixtureError, builtin_names, load_fixture

BUILTIN = {"paper-Q", "paper-MW", "paper-splitting", "symmetric-Q", "pi1-C1", "pi1-C3",
           "pi1-C1-script", "pi1-C3-script"} | {f"paper-C{i}" for i in range(1, 5)} | {
    f"paper-I{i}{s}" for i in range(1, 5) for s in "+-"}


def test_builtin_names():
    assert set(builtin_names()) == BUILTIN


@pytest.mark.parametrize("name", sorted(BUILTIN))
def test_every_fixture_has_a_kind(name):
    assert load_fixture(name)["kind"] in {"curve", "lattice", "splitting", "families", "presentation",
                                          "script", "arrangement", "ideal"}


def test_missing_fixture():
    with pytest.raises(FixtureError):
        load_fixture("no-such-fixture")
    with pytest.raises(FixtureError):
        load_fixture("/nonexistent/dir/x.json")


def test_wrong_kind():
    with pytest.raises(FixtureError):
        load_curve("paper-MW")


def test_env_path_takes_precedence(tmp_path, monkeypatch):
    doc = load_fixture("paper-C1")
    doc["components"][3]["poly"] = "x - t - 100"
    (tmp_path / "paper-C1.json").write_text(json.dumps(doc))
    monkeypatch.setenv(ENV_VAR, str(tmp_path))
    assert str(load_arrangement("paper-C1").by_label("L")) == "x - t - 100"
    monkeypatch.delenv(ENV_VAR)
    assert str(load_arrangement("paper-C1").by_label("L")) != "x - t - 100"


def test_explicit_path(tmp_path):
    path = tmp_path / "mine.json"
    path.write_text(json.dumps({"kind": "presentation", "generators": ["a", "b"],
                                "relators": [{"label": "r", "relation": "[a, b]"}]}))
    p = load_presentation(str(path))
    assert p.generators == ("a", "b")


def test_curve_fixture_contents():
    doc = load_fixture("paper-Q")
    curve, pts = load_curve(doc)
    assert set(pts) == {"P12", "P23", "P31", "T"}
    assert set(expected_points(doc)) == set(doc["combos"])
    # the printed signs for two generators differ from the ones that reproduce the combinations
    printed = doc["printed_points"]
    assert printed["P12"][1] != doc["points"]["P12"][1]
    assert printed["P23"][1] == doc["points"]["P23"][1]


def test_family_fixture_contents():
    fams, conics, bitangents, table = load_families()
    assert set(bitangents) == {"L1", "L2", "L3", "L4"}
    assert {"C1", "C2", "C3a(2)", "C3pa(2)"} <= set(conics)
    assert table["params"] == [-2, -1, 0, 1]
