"""End-to-end CLI checks: output formats, exit codes, figure rendering."""

import json

import pytest

from khdp.cli import main
from khdp.movies import (hopf_word, seifert_hopf_movie, serialize_movie,
                         serialize_word, unknot_word)


@pytest.fixture
def hopf_file(tmp_path):
    p = tmp_path / "hopf_plus.kh"
    p.write_text(serialize_word(hopf_word(True)))
    return str(p)


@pytest.fixture
def movie_file(tmp_path):
    p = tmp_path / "seifert.movie"
    p.write_text(serialize_movie(seifert_hopf_movie(False)))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_homology_text(capsys, hopf_file):
    code, out = run(capsys, "homology", hopf_file)
    assert code == 0
    rows = [ln.split("\t") for ln in out.splitlines() if ln[:1].isdigit()]
    assert ["0", "0", "1", "-"] in rows and ["2", "6", "1", "-"] in rows


def test_homology_json_agrees_with_text(capsys, hopf_file):
    code, out = run(capsys, "homology", hopf_file, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert {"bidegree": [2, 4], "free_rank": 1, "torsion": []} in data["results"]
    assert len(data["results"]) == 4


def test_homology_equivariant(capsys, hopf_file):
    code, out = run(capsys, "homology", hopf_file, "--ring", "equivariant",
                    "--format", "json")
    assert code == 0
    data = json.loads(out)
    degs = sorted(tuple(g["bidegree"]) for g in data["results"]["generators"])
    assert degs == [(0, 0), (0, 2), (2, 4), (2, 6)]
    assert data["results"]["differential"] == []


def test_homology_figure(capsys, hopf_file, tmp_path):
    fig = tmp_path / "h.png"
    code, _ = run(capsys, "homology", hopf_file, "--figure", str(fig))
    assert code == 0
    assert fig.exists() and fig.stat().st_size > 0


def test_map_command(capsys, movie_file):
    code, out = run(capsys, "map", movie_file, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["results"]["bidegree"] == [0, 0]
    assert data["results"]["is_generator"] is True


def test_verify_move_id(capsys):
    code, out = run(capsys, "verify", "MM16", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["results"]) == 4
    assert all(r["verdict"] in ("plus", "minus") for r in data["results"])
    assert all("variant" in r for r in data["results"])


def test_verify_unknown_id_exit_2(capsys):
    code, _ = run(capsys, "verify", "MM99")
    assert code == 2


def test_missing_file_exit_2(capsys):
    code, _ = run(capsys, "homology", "/nonexistent/x.kh")
    assert code == 2


def test_bad_word_exit_2(capsys, tmp_path):
    p = tmp_path / "bad.kh"
    p.write_text("top: 0\norient:\nCAP(0,0;SW)\n")
    code, _ = run(capsys, "homology", str(p))
    assert code == 2


def test_hom_command(capsys, tmp_path, hopf_file):
    u = tmp_path / "unknot.kh"
    u.write_text(serialize_word(unknot_word()))
    code, out = run(capsys, "hom", str(u), str(u), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert {"bidegree": [0, 0], "free_rank": 2, "torsion": []} in data["results"]
