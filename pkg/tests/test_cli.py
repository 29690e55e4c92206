import json
import subprocess
import sys

import pytest

from mpx.cli import run
from mpx.digraph import linear_coherent, tournament


@pytest.fixture
def graph_file(tmp_path):
    def write(g):
        p = tmp_path / "g.json"
        p.write_text(g.to_json())
        return str(p)
    return write


def test_gen_json_and_dot(capsys):
    assert run(["gen", "--family", "tournament", "--n", "4"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 4 and len(data["edges"]) == 6
    assert run(["gen", "--family", "caterpillar", "--legs", "1,0,2", "--format", "dot"]) == 0
    assert capsys.readouterr().out.startswith("digraph")


def test_gen_usage_errors(capsys):
    assert run(["gen", "--family", "dandelion", "--n", "1"]) == 2
    assert run(["gen", "--family", "nope"]) == 2
    assert run([]) == 2


def test_chi(graph_file, capsys):
    assert run(["chi", graph_file(linear_coherent(3)), "--method", "both"]) == 0
    assert capsys.readouterr().out.strip() == "0"
    assert run(["chi", graph_file(tournament(5)), "--json"]) == 0
    from mpx.formulas import chi_tournament

    assert json.loads(capsys.readouterr().out)["chi"] == chi_tournament(5)


def test_multipaths(graph_file, capsys):
    path = graph_file(linear_coherent(2))
    assert run(["multipaths", path]) == 0
    assert json.loads(capsys.readouterr().out) == [[], [0], [1], [0, 1]]
    assert run(["multipaths", path, "--by-length"]) == 0
    assert capsys.readouterr().out.strip() == "1 2 1"
    assert run(["multipaths", graph_file(tournament(6)), "--max-count", "10"]) == 2


def test_homology_and_matching(graph_file, capsys):
    from mpx.digraph import complete

    assert run(["homology", graph_file(tournament(7))]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "H2=6 H3=15"
    assert run(["homology", graph_file(complete(7)), "--matching", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["torsion"][1] == [3]


def test_bad_input(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{nope")
    assert run(["chi", str(p)]) == 2
    assert run(["chi", str(tmp_path / "missing.json")]) == 2


def test_decompose(graph_file, capsys):
    from mpx.digraph import dandelion

    assert run(["decompose", graph_file(dandelion(2, 2)), "--check-join", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [m["edges"] for m in data["modules"]] == [[0, 1], [2, 3]]
    assert all(m["stable"] for m in data["modules"]) and data["join_check"]["ok"]


def test_classify(capsys):
    assert run(["classify", "grid-II", "--n", "2", "--m", "1", "--oracle"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("S^2") and "agrees" in out
    assert run(["classify", "polygon"]) == 2


def test_series_and_fixture(capsys):
    assert run(["series", "tournament", "--order", "8", "--fixture", "A000587"]) == 0
    assert "fixture: match" in capsys.readouterr().out
    assert run(["series", "bipartite-count", "--order", "5", "--fixture", "A088699"]) == 0
    capsys.readouterr()
    assert run(["series", "complete", "--fixture", "A000587"]) == 1


def test_formula(capsys):
    assert run(["formula", "bell", "6"]) == 0
    assert capsys.readouterr().out.strip() == "203"
    assert run(["formula", "bell"]) == 2


def test_verify_quick_and_conjecture(capsys):
    assert run(["verify", "all", "--level", "quick"]) == 0
    assert "4/4 criteria pass" in capsys.readouterr().out
    # the bounded inequality has small counterexamples (see notes)
    assert run(["verify", "conjecture", "--n", "3"]) == 1
    assert run(["verify", "conjecture", "--n", "2"]) == 0


def test_verify_torsion_experiment(capsys):
    assert run(["verify", "torsion-conjecture", "--max-edges", "5", "--samples", "30"]) == 0


def test_pipeline_through_stdin():
    gen = subprocess.run([sys.executable, "-m", "mpx.cli", "gen", "--family", "tournament", "--n", "7"],
                         capture_output=True, text=True, check=True)
    hom = subprocess.run([sys.executable, "-m", "mpx.cli", "homology", "-"], input=gen.stdout,
                         capture_output=True, text=True)
    assert hom.returncode == 0 and hom.stdout.splitlines()[-1] == "H2=6 H3=15"


def test_report_is_deterministic():
    from mpx import verify

    a = verify.report([verify.run_one("2"), verify.run_one("4")])
    b = verify.report([verify.run_one("2"), verify.run_one("4")])
    assert a == b
