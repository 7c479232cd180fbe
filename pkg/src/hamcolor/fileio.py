"""
Coloring files.

Header line: `HPC1 <n> <q> <k> <mode>` (ASCII).  Modes:
  DENSE      one color byte per vertex, in rank order;
  DENSE-RLE  run-length pairs (uint32 little-endian count, uint8 color);
  RECIPE     the construction s-expression on the following line.
"""

from __future__ import annotations

import numpy as np

from .coloring import Coloring, from_dense
from .hamming import Shape
from .recipes import build, parse_recipe, predict, recipe_to_text

MAGIC = "HPC1"


class FileFormatError(ValueError):
    pass


def write_coloring(path: str, col: Coloring, mode: str = "RECIPE") -> None:
    if mode == "RECIPE" and col.recipe is None:
        raise FileFormatError("coloring has no recipe; write it as DENSE")
    header = f"{MAGIC} {col.shape.n} {col.shape.q} {col.k} {mode}\n".encode()
    with open(path, "wb") as fh:
        fh.write(header)
        if mode == "RECIPE":
            fh.write((recipe_to_text(col.recipe) + "\n").encode())
        elif mode == "DENSE":
            fh.write(col.materialize().tobytes())
        elif mode == "DENSE-RLE":
            fh.write(_rle_encode(col.materialize()))
        else:
            raise FileFormatError(f"unknown mode {mode!r}")


def read_coloring(path: str) -> Coloring:
    with open(path, "rb") as fh:
        header = fh.readline().decode().split()
        if len(header) != 5 or header[0] != MAGIC:
            raise FileFormatError(f"bad header in {path}")
        n, q, k = int(header[1]), int(header[2]), int(header[3])
        mode = header[4]
        shape = Shape(n, q)
        if mode == "RECIPE":
            rec = parse_recipe(fh.read().decode())
            pred = predict(rec)
            if pred.shape != shape or pred.k != k:
                raise FileFormatError(
                    f"recipe yields H({pred.shape.n},{pred.shape.q}) with "
                    f"{pred.k} colors, header says H({n},{q}) with {k}")
            return build(rec)
        payload = fh.read()
        if mode == "DENSE":
            dense = np.frombuffer(payload, dtype=np.uint8)
        elif mode == "DENSE-RLE":
            dense = _rle_decode(payload)
        else:
            raise FileFormatError(f"unknown mode {mode!r}")
        if len(dense) != shape.size:
            raise FileFormatError(
                f"payload holds {len(dense)} vertices, expected {shape.size}")
        return from_dense(shape, dense, k)


def _rle_encode(dense: np.ndarray) -> bytes:
    out = bytearray()
    edges = np.flatnonzero(np.diff(dense)) + 1
    starts = np.concatenate(([0], edges))
    ends = np.concatenate((edges, [len(dense)]))
    for s, e in zip(starts, ends):
        run = int(e - s)
        val = int(dense[s])
        while run > 0:
            chunk = min(run, 0xFFFFFFFF)
            out += chunk.to_bytes(4, "little") + bytes([val])
            run -= chunk
    return bytes(out)


def _rle_decode(payload: bytes) -> np.ndarray:
    if len(payload) % 5:
        raise FileFormatError("truncated RLE payload")
    rec = np.frombuffer(payload, dtype=np.uint8).reshape(-1, 5)
    counts = rec[:, :4].copy().view("<u4")[:, 0]
    return np.repeat(rec[:, 4], counts)
