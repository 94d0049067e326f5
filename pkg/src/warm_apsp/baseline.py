"""Cold-start solvers: Floyd-Warshall and binary-heap Dijkstra."""
from __future__ import annotations

import numpy as np

from . import _kernels
from .graph_core import INF, ApspMatrix, DenseGraph, GraphError, PathResult


def floyd_warshall(g: DenseGraph) -> ApspMatrix:
    """All-pairs distances by n rank-one min-plus relaxations."""
    return ApspMatrix._adopt(_floyd_warshall(g.weights))


def _floyd_warshall(w: np.ndarray) -> np.ndarray:
    d = np.array(w, dtype=np.float64)
    tmp = np.empty_like(d)
    for k in range(d.shape[0]):
        np.add(d[:, k, None], d[None, k, :], out=tmp)
        np.minimum(d, tmp, out=d)
    return d


def dijkstra_row(g: DenseGraph, s) -> np.ndarray:
    s = g.node(s)
    dist = np.empty(g.n)
    pred = np.empty(g.n, np.int64)
    _kernels.dijkstra(g.weights, s, -1, dist, pred)
    return dist


def dijkstra_apsp(g: DenseGraph) -> ApspMatrix:
    out = np.empty((g.n, g.n))
    _kernels.dijkstra_rows(g.weights, np.arange(g.n, dtype=np.int64), out)
    return ApspMatrix._adopt(out)


def shortest_path_dijkstra(g: DenseGraph, i, j) -> PathResult:
    i, j = g.node(i), g.node(j)
    if i == j:
        raise GraphError("source and target must differ")
    return path_on_matrix(g.weights, i, j)


def path_on_matrix(w: np.ndarray, i: int, j: int) -> PathResult:
    """Early-exit Dijkstra from ``i`` to ``j`` on a raw weight matrix."""
    n = w.shape[0]
    dist = np.empty(n)
    pred = np.empty(n, np.int64)
    _kernels.dijkstra(w, i, j, dist, pred)
    if dist[j] == INF:
        return PathResult.no_path()
    nodes = [j]
    while nodes[-1] != i:
        nodes.append(int(pred[nodes[-1]]))
    nodes.reverse()
    return PathResult(tuple(nodes), float(dist[j]))


def warmup() -> None:
    """Trigger JIT compilation so later timings exclude it."""
    w = np.array([[0.0, 1.0], [INF, 0.0]])
    frozen = DenseGraph(w, directed=True).weights
    for arr in (w, frozen):
        path_on_matrix(arr, 0, 1)
        _kernels.dijkstra_rows(arr, np.arange(2, dtype=np.int64), np.empty((2, 2)))
