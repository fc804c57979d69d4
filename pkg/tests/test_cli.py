import json

import pytest

from tiltfan.brauer import graph_to_json
from tiltfan.cli import fan_svg, kase_family_fan, main, polytope_to_json
from tiltfan.fan import fan_from_json, fan_to_json
from tiltfan.polytope import convex_hull, g_polytope

from conftest import gamma3, path_tree


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def test_kase_family_fan_shapes():
    fan = kase_family_fan(4, 5)
    assert len(fan.chambers) == 11
    assert set(fan.rays) == {
        (1, 0), (1, -1), (1, -2), (1, -3), (0, -1), (-1, 0),
        (0, 1), (-1, 1), (-2, 1), (-3, 1), (-4, 1),
    }
    square = kase_family_fan(1, 1)
    assert len(square.chambers) == 4
    assert set(square.rays) == {(1, 0), (0, 1), (-1, 0), (0, -1)}


def test_brauer_analyze(tmp_path, capsys):
    graph = write(tmp_path, "tree3.json", graph_to_json(path_tree(3)))
    assert main(["brauer", "--graph", graph, "--analyze"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["f"] == [1, 12, 30, 20]
    assert report["h"] == [1, 9, 9, 1]
    assert report["dehn_sommerville"] is True
    assert report["ehrhart"]["1"] == 13


def test_weyl_eulerian(tmp_path, capsys):
    assert main(["weyl", "--type", "B", "--n", "2", "--eulerian"]) == 0
    assert json.loads(capsys.readouterr().out) == [1, 6, 1]


def test_cluster_budget_exhaustion(tmp_path, capsys):
    matrix = write(tmp_path, "kron.json", {"n": 2, "B": [[0, 2], [-2, 0]]})
    out = str(tmp_path / "fan.json")
    assert main(["cluster", "--matrix", matrix, "--budget", "100", "--fan", out]) == 2
    data = json.loads((tmp_path / "fan.json").read_text())
    assert len(data["chambers"]) >= 100
    assert data["complete"] == "incomplete"


def test_cluster_a2_fan_round_trip(tmp_path):
    matrix = write(tmp_path, "a2.json", {"n": 2, "B": [[0, 1], [-1, 0]]})
    out = str(tmp_path / "fan.json")
    assert main(["cluster", "--matrix", matrix, "--fan", out]) == 0
    fan = fan_from_json(json.loads((tmp_path / "fan.json").read_text()))
    assert len(fan.chambers) == 5
    assert fan_to_json(fan) == json.loads((tmp_path / "fan.json").read_text())


def test_analyze_and_classify_commands(tmp_path, capsys):
    matrix = write(tmp_path, "a2.json", {"n": 2, "B": [[0, 1], [-1, 0]]})
    out = str(tmp_path / "fan.json")
    main(["cluster", "--matrix", matrix, "--fan", out])
    assert main(["analyze", "--input", out, "--ell-max", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["h"] == [1, 3, 1]
    assert main(["classify", "--input", out]) == 0
    assert json.loads(capsys.readouterr().out)["class"] == 2


def test_validation_error_exit_code(tmp_path, capsys):
    bad = write(
        tmp_path, "bad.json",
        {"schema_version": 1, "rank": 2, "rays": [[2, 0], [0, 1]],
         "chambers": [[0, 1]], "base": 0},
    )
    assert main(["analyze", "--input", bad]) == 1


def test_brauer_roots_output(tmp_path, capsys):
    graph = write(tmp_path, "g3.json", graph_to_json(gamma3()))
    assert main(["brauer", "--graph", graph, "--roots"]) == 0
    table = json.loads(capsys.readouterr().out)["roots"]
    assert len(table) == 18


def test_svg_deterministic(tmp_path):
    fan = kase_family_fan(3, 3)
    poly = g_polytope(fan)
    assert fan_svg(fan, poly) == fan_svg(fan, poly)
    assert fan_svg(fan, poly).startswith("<svg")


def test_plot_command(tmp_path):
    matrix = write(tmp_path, "a2.json", {"n": 2, "B": [[0, 1], [-1, 0]]})
    out = str(tmp_path / "fan.json")
    svg = str(tmp_path / "fan.svg")
    main(["cluster", "--matrix", matrix, "--fan", out])
    assert main(["plot", "--input", out, "--out", svg]) == 0
    assert (tmp_path / "fan.svg").read_text().startswith("<svg")


def test_env_budget(tmp_path, monkeypatch, capsys):
    matrix = write(tmp_path, "kron.json", {"n": 2, "B": [[0, 2], [-2, 0]]})
    monkeypatch.setenv("TILTFAN_BUDGET", "50")
    assert main(["cluster", "--matrix", matrix]) == 2


def test_kase_invalid_parameters():
    with pytest.raises(ValueError):
        kase_family_fan(0, 1)


def test_polytope_json_rationals():
    poly = convex_hull([(1, 0), (0, 1), (-1, 0), (0, -1)])
    data = polytope_to_json(poly)
    assert data["schema_version"] == 1
    assert all(isinstance(f["offset"], str) for f in data["facets"])


def test_ell_max_cap(tmp_path, capsys):
    matrix = write(tmp_path, "a2.json", {"n": 2, "B": [[0, 1], [-1, 0]]})
    assert main(["cluster", "--matrix", matrix, "--analyze", "--ell-max", "9"]) == 1


def test_fan_command_paranoid(tmp_path, capsys):
    fan = kase_family_fan(2, 2)
    path = write(tmp_path, "fan.json", fan_to_json(fan))
    assert main(["fan", "--input", path, "--paranoid"]) == 0
    assert "complete=certified" in capsys.readouterr().out
