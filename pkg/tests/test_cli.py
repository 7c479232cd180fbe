import importlib.resources as ir

import pytest

from hamcolor import cli


def test_params_settled(capsys):
    assert cli.main(["params", "--q", "3", "--b", "8", "--c", "1"]) == 0
    out = capsys.readouterr().out
    assert "LB = 4" in out and "UB = 4" in out and "settled" in out


def test_params_inadmissible(capsys):
    assert cli.main(["params", "--q", "3", "--b", "4", "--c", "1"]) == 2
    assert "inadmissible" in capsys.readouterr().out


def test_params_open(capsys):
    assert cli.main(["params", "--q", "6", "--b", "7", "--c", "5"]) == 3
    assert "???" in capsys.readouterr().out


def test_params_gap(capsys):
    assert cli.main(["params", "--q", "3", "--b", "10", "--c", "8"]) == 3
    assert "-?-" in capsys.readouterr().out


def test_construct_verify_roundtrip(tmp_path, capsys):
    path = str(tmp_path / "c.hpc")
    rc = cli.main(["construct", "--recipe", "(perfect :q 3 :r 2 :t 1)",
                   "--out", path, "--mode", "DENSE-RLE"])
    assert rc == 0
    assert cli.main(["verify", path, "--b", "8", "--c", "1"]) == 0
    assert "PASS" in capsys.readouterr().out
    # wrong expectation fails
    assert cli.main(["verify", path, "--b", "7", "--c", "2"]) == 1


def test_verify_modes(tmp_path):
    path = str(tmp_path / "c.hpc")
    cli.main(["construct", "--recipe", "(perfect :q 3 :r 2 :t 1)", "--out", path])
    assert cli.main(["verify", path, "--mode", "full"]) == 0
    assert cli.main(["verify", path, "--mode", "sample", "--samples", "200"]) == 0


def test_wdist(capsys):
    assert cli.main(["wdist", "--q", "3", "--n", "4", "--b", "8", "--c", "1"]) == 0
    out = capsys.readouterr().out
    assert "[1, 0, 0, 8, 0]" in out


def test_wdist_infeasible(capsys):
    assert cli.main(["wdist", "--q", "2", "--n", "4", "--b", "4", "--c", "1"]) == 1
    assert "infeasible" in capsys.readouterr().out


def test_table_matches_fixture(capsys):
    fixture = str(ir.files("hamcolor") / "data" / "table_q6.tsv")
    assert cli.main(["table", "--q", "6", "--max-bc", "12",
                     "--format", "tsv", "--fixture", fixture]) == 0


def test_table_detects_mismatch(tmp_path, capsys):
    fixture = ir.files("hamcolor") / "data" / "table_q6.tsv"
    bad = tmp_path / "bad.tsv"
    bad.write_text(fixture.read_text().replace("???", "-?-"))
    rc = cli.main(["table", "--q", "6", "--max-bc", "12",
                   "--format", "tsv", "--fixture", str(bad)])
    assert rc == 1
    assert "DIFF" in capsys.readouterr().err
