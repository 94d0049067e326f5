"""Dense weighted graphs, APSP matrices and infinity-aware weight helpers.

Weights are float64 with ``math.inf`` standing for an absent edge or an
unreachable pair. Graph and matrix objects never expose writable arrays;
every mutation returns a new object.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

INF = math.inf

# Absolute tolerance for comparing finite distances.
EPSILON = 1e-9


class GraphError(ValueError):
    """Raised for malformed graphs, bad node ids and invalid weights."""


def check_weight(w) -> float:
    """Return ``w`` as a float, rejecting negatives and NaN."""
    w = float(w)
    if math.isnan(w) or w < 0:
        raise GraphError(f"weight must be non-negative or inf, got {w!r}")
    return w


def sat_add(*terms: float) -> float:
    """Sum of weights where any infinite term makes the result infinite."""
    total = 0.0
    for t in terms:
        if t == INF:
            return INF
        total += t
    return total


def dist_equal(a: float, b: float, eps: float = EPSILON) -> bool:
    if a == INF or b == INF:
        return a == b
    return abs(a - b) <= eps


def max_deviation(a: np.ndarray, b: np.ndarray) -> float:
    """Largest absolute difference between two distance matrices.

    Returns ``inf`` if the matrices disagree on which entries are infinite.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise GraphError(f"shape mismatch: {a.shape} vs {b.shape}")
    ia, ib = np.isinf(a), np.isinf(b)
    if not np.array_equal(ia, ib):
        return INF
    if a.size == 0 or ia.all():
        return 0.0
    finite = ~ia
    return float(np.max(np.abs(a[finite] - b[finite])))


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.float64)
    arr.setflags(write=False)
    return arr


def _check_node(n: int, k: int) -> int:
    if isinstance(k, (bool, np.bool_)) or not isinstance(k, (int, np.integer)):
        raise GraphError(f"node id must be an integer, got {k!r}")
    k = int(k)
    if not 0 <= k < n:
        raise GraphError(f"node id {k} out of range for graph of {n} nodes")
    return k


@dataclass(frozen=True, eq=False)
class DenseGraph:
    """Square weight matrix; ``weights[i, j]`` is the edge weight i -> j."""

    weights: np.ndarray
    directed: bool
    labels: Optional[tuple] = None

    def __post_init__(self):
        w = np.array(self.weights, dtype=np.float64)
        if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] == 0:
            raise GraphError(f"weights must be a non-empty square matrix, got shape {w.shape}")
        if np.isnan(w).any():
            raise GraphError("weights contain NaN")
        if (w < 0).any():
            raise GraphError("weights must be non-negative")
        if (np.diagonal(w) != 0).any():
            raise GraphError("diagonal weights must be 0")
        if not self.directed and not np.array_equal(w, w.T):
            raise GraphError("undirected graph requires a symmetric weight matrix")
        object.__setattr__(self, "weights", _frozen(w))
        object.__setattr__(self, "directed", bool(self.directed))
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != w.shape[0]:
                raise GraphError("labels length must equal node count")
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    def node(self, k) -> int:
        return _check_node(self.n, k)

    def __eq__(self, other):
        if not isinstance(other, DenseGraph):
            return NotImplemented
        return (
            self.directed == other.directed
            and self.labels == other.labels
            and np.array_equal(self.weights, other.weights)
        )

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"DenseGraph(n={self.n}, {kind})"


@dataclass(frozen=True, eq=False)
class ApspMatrix:
    """``dist[i, j]`` is the shortest-path distance from node i to node j."""

    dist: np.ndarray

    def __post_init__(self):
        d = np.array(self.dist, dtype=np.float64)
        if d.ndim != 2 or d.shape[0] != d.shape[1] or d.shape[0] == 0:
            raise GraphError(f"distance matrix must be non-empty and square, got shape {d.shape}")
        object.__setattr__(self, "dist", _frozen(d))

    @classmethod
    def _adopt(cls, d: np.ndarray) -> "ApspMatrix":
        """Wrap a freshly computed float64 array without copying it."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "dist", _frozen(d))
        return obj

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    def __getitem__(self, idx):
        return self.dist[idx]

    def __eq__(self, other):
        if not isinstance(other, ApspMatrix):
            return NotImplemented
        return np.array_equal(self.dist, other.dist)

    def __repr__(self):
        return f"ApspMatrix(n={self.n})"


@dataclass(frozen=True)
class PathResult:
    """Node sequence of a shortest path; empty with ``total = inf`` when none exists."""

    nodes: tuple
    total: float

    @property
    def found(self) -> bool:
        return bool(self.nodes)

    @classmethod
    def no_path(cls) -> "PathResult":
        return cls((), INF)


def new_graph(n: int, directed: bool, labels: Optional[Sequence[str]] = None) -> DenseGraph:
    if n < 1:
        raise GraphError("a graph needs at least one node")
    w = np.full((n, n), INF)
    np.fill_diagonal(w, 0.0)
    return DenseGraph(w, directed, None if labels is None else tuple(labels))


def set_weight(g: DenseGraph, i, j, w) -> DenseGraph:
    i, j = g.node(i), g.node(j)
    if i == j:
        raise GraphError("diagonal weights are fixed at 0")
    w = check_weight(w)
    out = g.weights.copy()
    out[i, j] = w
    if not g.directed:
        out[j, i] = w
    return DenseGraph(out, g.directed, g.labels)


def drop_node(g: DenseGraph, k) -> DenseGraph:
    """Remove node ``k``; survivors above ``k`` shift down by one."""
    k = g.node(k)
    if g.n < 2:
        raise GraphError("cannot remove the last node of a graph")
    keep = np.delete(np.arange(g.n), k)
    labels = None if g.labels is None else g.labels[:k] + g.labels[k + 1:]
    return DenseGraph(g.weights[np.ix_(keep, keep)], g.directed, labels)


def append_node(g: DenseGraph, out_w, in_w, label: Optional[str] = None) -> DenseGraph:
    """Add node ``g.n`` with edges ``out_w[t]`` (new -> t) and ``in_w[t]`` (t -> new)."""
    out_w = _edge_vector(out_w, g.n, "out_w")
    in_w = _edge_vector(in_w, g.n, "in_w")
    if not g.directed and not np.array_equal(out_w, in_w):
        raise GraphError("undirected graph requires out_w == in_w")
    n = g.n
    w = np.empty((n + 1, n + 1))
    w[:n, :n] = g.weights
    w[n, :n] = out_w
    w[:n, n] = in_w
    w[n, n] = 0.0
    labels = None
    if g.labels is not None:
        labels = g.labels + (str(n) if label is None else label,)
    return DenseGraph(w, g.directed, labels)


def _edge_vector(v, n: int, name: str) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64).ravel()
    if v.shape[0] != n:
        raise GraphError(f"{name} must have length {n}, got {v.shape[0]}")
    if np.isnan(v).any() or (v < 0).any():
        raise GraphError(f"{name} entries must be non-negative or inf")
    return v


def removal_index_map(n: int, k: int) -> dict:
    """Old index -> new index for the survivors of removing ``k``."""
    return {m: (m if m < k else m - 1) for m in range(n) if m != k}
