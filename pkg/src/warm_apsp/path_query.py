"""Point-to-point shortest paths answered from a known APSP matrix.

Only nodes k with ``m[i, k] + m[k, j] == m[i, j]`` can lie on a shortest
i -> j path, so Dijkstra runs on the subgraph induced by those nodes.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .baseline import path_on_matrix
from .graph_core import INF, ApspMatrix, DenseGraph, GraphError, PathResult, _check_node
from .warm_update import UpdateConfig


@dataclass(frozen=True)
class CandidateSet:
    nodes: tuple  # original ids, ascending
    index_map: dict  # original id -> subgraph id

    def __contains__(self, k):
        return k in self.index_map

    def __len__(self):
        return len(self.nodes)


def _candidate_array(d: np.ndarray, i: int, j: int, eps: float) -> np.ndarray:
    if d[i, j] == INF:
        return np.array(sorted((i, j)))
    on_path = d[i, :] + d[:, j] <= d[i, j] + eps
    on_path[i] = on_path[j] = True
    return np.flatnonzero(on_path)


def candidate_nodes(m: ApspMatrix, i, j, eps: float = 1e-9) -> CandidateSet:
    i, j = _check_node(m.n, i), _check_node(m.n, j)
    if i == j:
        raise GraphError("source and target must differ")
    nodes = _candidate_array(m.dist, i, j, eps).tolist()
    return CandidateSet(tuple(nodes), {k: s for s, k in enumerate(nodes)})


def warm_shortest_path(m: ApspMatrix, g: DenseGraph, i, j, cfg: UpdateConfig = UpdateConfig()) -> PathResult:
    """Shortest i -> j path, assuming ``m`` is the current APSP of ``g``."""
    i, j = g.node(i), g.node(j)
    if i == j:
        raise GraphError("source and target must differ")
    if m.n != g.n:
        raise GraphError(f"matrix has {m.n} nodes but graph has {g.n}")
    cand = _candidate_array(m.dist, i, j, cfg.epsilon)
    sub = g.weights.take(cand, axis=0).take(cand, axis=1)
    ids = cand.tolist()
    res = path_on_matrix(sub, ids.index(i), ids.index(j))
    if not res.found:
        return res
    return PathResult(tuple(ids[s] for s in res.nodes), res.total)
