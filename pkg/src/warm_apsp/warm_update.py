"""Warm-start maintenance of an APSP matrix under node and edge updates.

Adding a node costs Theta(n^2): the new row and column come from one
min-plus product against the old matrix, and every old pair can only
improve by routing through the new node.

Removing node k only disturbs pairs (i, j) for which k sits on a shortest
path, i.e. ``m[i, j] == m[i, k] + m[k, j]``. Pairs where the inequality is
strict keep their distance. The fraction of sources owning at least one
disturbed pair decides between recomputing just those rows with Dijkstra
and a full Floyd-Warshall pass.

Edge updates remove the cheaper endpoint and add it back with the new
weight.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import _kernels
from .baseline import _floyd_warshall
from .graph_core import (
    EPSILON,
    ApspMatrix,
    DenseGraph,
    GraphError,
    append_node,
    check_weight,
    drop_node,
    set_weight,
)


class Strategy(str, enum.Enum):
    AUTO = "auto"
    ALWAYS_FLOYD = "always_floyd"
    ALWAYS_DIJKSTRA = "always_dijkstra"


FULL_RECOMPUTE = "full_recompute"
SELECTIVE_DIJKSTRA = "selective_dijkstra"


@dataclass(frozen=True)
class UpdateConfig:
    delta: float = 0.8
    epsilon: float = EPSILON
    strategy_override: Strategy = Strategy.AUTO

    def __post_init__(self):
        if not 0.0 <= self.delta <= 1.0:
            raise ValueError(f"delta must lie in [0, 1], got {self.delta}")
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        object.__setattr__(self, "strategy_override", Strategy(self.strategy_override))


@dataclass(frozen=True)
class NeedUpdateList:
    """Pairs whose distance may change when ``removed`` is deleted.

    ``per_source`` maps every surviving node (post-removal index) to the
    tuple of targets, also post-removal, that need recomputing.
    """

    removed: int
    pre_n: int
    per_source: dict = field(default_factory=dict)

    def non_empty_count(self) -> int:
        return sum(1 for targets in self.per_source.values() if targets)

    def dirty_sources(self) -> list:
        return [s for s, targets in sorted(self.per_source.items()) if targets]

    def pairs(self) -> set:
        return {(s, t) for s, targets in self.per_source.items() for t in targets}


@dataclass(frozen=True)
class RemovalCost:
    value: float

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"removal cost must lie in [0, 1], got {self.value}")

    def __float__(self):
        return self.value


class RemovalResult(NamedTuple):
    matrix: ApspMatrix
    need_update: NeedUpdateList
    cost: RemovalCost
    strategy: str


class EdgeUpdate(NamedTuple):
    matrix: ApspMatrix
    graph: DenseGraph
    removed: int
    strategy: str


def apsp_add_node(m: ApspMatrix, g_new: DenseGraph, out_w, in_w) -> ApspMatrix:
    """APSP of ``g_new``, whose last node was just appended to the graph of ``m``."""
    n = m.n
    if g_new.n != n + 1:
        raise GraphError(f"expected a graph of {n + 1} nodes, got {g_new.n}")
    out_w = np.asarray(out_w, dtype=np.float64).ravel()
    in_w = np.asarray(in_w, dtype=np.float64).ravel()
    if out_w.shape[0] != n or in_w.shape[0] != n:
        raise GraphError(f"edge vectors must have length {n}")
    if not (np.array_equal(g_new.weights[n, :n], out_w) and np.array_equal(g_new.weights[:n, n], in_w)):
        raise GraphError("edge vectors do not match the appended node of g_new")

    d = m.dist
    out = np.empty((n + 1, n + 1))
    block = out[:n, :n]
    # new -> r: leave by some edge (new, t), then follow the old shortest path t -> r
    np.add(out_w[:, None], d, out=block)
    row = block.min(axis=0)
    # r -> new: old shortest path r -> t, then edge (t, new)
    np.add(d, in_w[None, :], out=block)
    col = block.min(axis=1)

    np.add(col[:, None], row[None, :], out=block)
    np.minimum(block, d, out=block)
    out[n, :n] = row
    out[:n, n] = col
    out[n, n] = 0.0
    return ApspMatrix._adopt(out)


def _survivors(n: int, k: int) -> np.ndarray:
    return np.delete(np.arange(n), k)


def build_need_update_list(m: ApspMatrix, g: DenseGraph, k, cfg: UpdateConfig = UpdateConfig()) -> NeedUpdateList:
    n = m.n
    if g.n != n:
        raise GraphError(f"matrix has {n} nodes but graph has {g.n}")
    if n < 2:
        raise GraphError("need at least two nodes to remove one")
    k = g.node(k)
    keep = _survivors(n, k)
    d = m.dist[np.ix_(keep, keep)]
    through = m.dist[keep, k][:, None] + m.dist[k, keep][None, :]
    # Ties and inf == inf both count as "may change".
    mask = d >= through - cfg.epsilon
    np.fill_diagonal(mask, False)
    per_source = dict.fromkeys(range(n - 1), ())
    for s in np.flatnonzero(mask.any(axis=1)):
        per_source[int(s)] = tuple(np.flatnonzero(mask[s]).tolist())
    return NeedUpdateList(removed=k, pre_n=n, per_source=per_source)


def removal_cost(need: NeedUpdateList, pre_n: int) -> RemovalCost:
    if pre_n < 2:
        raise GraphError("removal cost needs pre_n >= 2")
    return RemovalCost(need.non_empty_count() / (pre_n - 1))


def apsp_remove_node(m: ApspMatrix, g: DenseGraph, k, cfg: UpdateConfig = UpdateConfig()) -> RemovalResult:
    k = g.node(k)
    g_small = drop_node(g, k)
    need = build_need_update_list(m, g, k, cfg)
    cost = removal_cost(need, g.n)

    override = cfg.strategy_override
    if override is Strategy.ALWAYS_FLOYD or (override is Strategy.AUTO and cost.value > cfg.delta):
        return RemovalResult(ApspMatrix._adopt(_floyd_warshall(g_small.weights)), need, cost, FULL_RECOMPUTE)

    keep = _survivors(g.n, k)
    out = np.ascontiguousarray(m.dist[np.ix_(keep, keep)])
    dirty = np.asarray(need.dirty_sources(), dtype=np.int64)
    if dirty.size:
        _kernels.dijkstra_rows(g_small.weights, dirty, out)
    return RemovalResult(ApspMatrix._adopt(out), need, cost, SELECTIVE_DIJKSTRA)


def apsp_modify_edge(m: ApspMatrix, g: DenseGraph, u, v, w_new, cfg: UpdateConfig = UpdateConfig()) -> EdgeUpdate:
    """Set edge (u, v) to ``w_new`` (``inf`` deletes it) and update ``m``.

    Node ids in the result match those of ``g``.
    """
    u, v = g.node(u), g.node(v)
    if u == v:
        raise GraphError("edge endpoints must differ")
    w_new = check_weight(w_new)
    if m.n != g.n:
        raise GraphError(f"matrix has {m.n} nodes but graph has {g.n}")

    cost_u = removal_cost(build_need_update_list(m, g, u, cfg), g.n).value
    cost_v = removal_cost(build_need_update_list(m, g, v, cfg), g.n).value
    if cost_u < cost_v or (cost_u == cost_v and u < v):
        x = u
    else:
        x = v

    removed = apsp_remove_node(m, g, x, cfg)
    g_mod = set_weight(g, u, v, w_new)
    keep = _survivors(g.n, x)
    out_w = g_mod.weights[x, keep]
    in_w = g_mod.weights[keep, x]
    g_app = append_node(drop_node(g_mod, x), out_w, in_w)
    m_app = apsp_add_node(removed.matrix, g_app, out_w, in_w)

    # x went to the end; move it back to its original slot.
    pos = np.arange(g.n)
    pos[x] = g.n - 1
    pos[x + 1:] -= 1
    restored = m_app.dist[np.ix_(pos, pos)]
    return EdgeUpdate(ApspMatrix._adopt(restored), g_mod, x, removed.strategy)
