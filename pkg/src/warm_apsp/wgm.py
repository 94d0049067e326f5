"""Reading and writing the WGM text grid format.

Layout::

    WGM 1
    directed true
    n 3
    0 5 inf
    5 0 2
    inf 2 0

APSP matrices use the same grid with the header ``APSP 1``.
"""
from __future__ import annotations

import math
import re
from pathlib import Path

import numpy as np

from .graph_core import ApspMatrix, DenseGraph, GraphError

GRAPH_HEADER = "WGM 1"
APSP_HEADER = "APSP 1"

_DECIMAL = re.compile(r"^(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?$")


class FormatError(GraphError):
    pass


def format_weight(x: float) -> str:
    if x == math.inf:
        return "inf"
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(float(x))


def parse_weight(tok: str) -> float:
    if tok == "inf":
        return math.inf
    if not _DECIMAL.match(tok):
        raise FormatError(f"bad weight token {tok!r}")
    return float(tok)


def _dumps(header: str, matrix: np.ndarray, directed: bool) -> str:
    lines = [header, f"directed {'true' if directed else 'false'}", f"n {matrix.shape[0]}"]
    for row in matrix:
        lines.append(" ".join(format_weight(x) for x in row))
    return "\n".join(lines) + "\n"


def _loads(text: str, header: str):
    lines = text.splitlines()
    if len(lines) < 3:
        raise FormatError("truncated file: expected header, directed and n lines")
    if lines[0].strip() != header:
        raise FormatError(f"expected header {header!r}, got {lines[0]!r}")
    parts = lines[1].split()
    if len(parts) != 2 or parts[0] != "directed" or parts[1] not in ("true", "false"):
        raise FormatError(f"bad directed line {lines[1]!r}")
    directed = parts[1] == "true"
    parts = lines[2].split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise FormatError(f"bad node-count line {lines[2]!r}")
    n = int(parts[1])
    if n < 1:
        raise FormatError("node count must be at least 1")
    body = lines[3:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != n:
        raise FormatError(f"expected {n} matrix rows, got {len(body)}")
    matrix = np.empty((n, n))
    for i, line in enumerate(body):
        toks = line.split()
        if len(toks) != n:
            raise FormatError(f"row {i}: expected {n} tokens, got {len(toks)}")
        for j, tok in enumerate(toks):
            matrix[i, j] = parse_weight(tok)
        if matrix[i, i] != 0:
            raise FormatError(f"row {i}: diagonal must be 0")
    return directed, matrix


def dumps_graph(g: DenseGraph) -> str:
    return _dumps(GRAPH_HEADER, g.weights, g.directed)


def loads_graph(text: str) -> DenseGraph:
    directed, w = _loads(text, GRAPH_HEADER)
    try:
        return DenseGraph(w, directed)
    except FormatError:
        raise
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def dumps_apsp(m: ApspMatrix, directed: bool) -> str:
    return _dumps(APSP_HEADER, m.dist, directed)


def loads_apsp(text: str) -> ApspMatrix:
    _, d = _loads(text, APSP_HEADER)
    return ApspMatrix(d)


def read_graph(path) -> DenseGraph:
    return loads_graph(Path(path).read_text())


def write_graph(g: DenseGraph, path) -> None:
    Path(path).write_text(dumps_graph(g))


def read_apsp(path) -> ApspMatrix:
    return loads_apsp(Path(path).read_text())


def write_apsp(m: ApspMatrix, path, directed: bool) -> None:
    Path(path).write_text(dumps_apsp(m, directed))
