import numpy as np
import pytest

from hamcolor import codes, fileio, recipes


@pytest.fixture
def col():
    return codes.hamming_perfect_coloring(2, 3, 1)


@pytest.mark.parametrize("mode", ["RECIPE", "DENSE", "DENSE-RLE"])
def test_roundtrip(tmp_path, col, mode):
    path = str(tmp_path / "c.hpc")
    fileio.write_coloring(path, col, mode=mode)
    back = fileio.read_coloring(path)
    assert back.shape == col.shape and back.k == col.k
    assert np.array_equal(back.materialize(), col.materialize())


def test_header_format(tmp_path, col):
    path = str(tmp_path / "c.hpc")
    fileio.write_coloring(path, col, mode="DENSE")
    with open(path, "rb") as fh:
        assert fh.readline() == b"HPC1 4 3 2 DENSE\n"


def test_recipe_mode_needs_recipe(tmp_path, col):
    from hamcolor.coloring import from_dense
    bare = from_dense(col.shape, col.materialize(), 2)
    with pytest.raises(fileio.FileFormatError):
        fileio.write_coloring(str(tmp_path / "c.hpc"), bare, mode="RECIPE")


def test_recipe_header_cross_check(tmp_path):
    path = str(tmp_path / "c.hpc")
    with open(path, "wb") as fh:
        fh.write(b"HPC1 5 3 2 RECIPE\n(perfect :q 3 :r 2 :t 1)\n")
    with pytest.raises(fileio.FileFormatError):
        fileio.read_coloring(path)


def test_bad_magic(tmp_path):
    path = str(tmp_path / "c.hpc")
    with open(path, "wb") as fh:
        fh.write(b"NOPE 4 3 2 DENSE\n")
    with pytest.raises(fileio.FileFormatError):
        fileio.read_coloring(path)


def test_truncated_payload(tmp_path):
    path = str(tmp_path / "c.hpc")
    with open(path, "wb") as fh:
        fh.write(b"HPC1 4 3 2 DENSE\n" + b"\x01" * 10)
    with pytest.raises(fileio.FileFormatError):
        fileio.read_coloring(path)


def test_rle_compresses_runs(tmp_path):
    from hamcolor.constructions import solid_coloring
    col = solid_coloring(8, 2, 1)
    p1, p2 = str(tmp_path / "a"), str(tmp_path / "b")
    fileio.write_coloring(p1, col, mode="DENSE")
    fileio.write_coloring(p2, col, mode="DENSE-RLE")
    import os
    assert os.path.getsize(p2) < os.path.getsize(p1)
    assert np.array_equal(fileio.read_coloring(p2).materialize(), col.materialize())
