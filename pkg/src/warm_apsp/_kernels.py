"""Compiled Dijkstra inner loops.

The heap is a pair of flat arrays (keys, node ids) ordered by
``(distance, node)``, so equal distances pop the smaller node first.
Stale entries are skipped on pop (lazy deletion).
"""
import numpy as np
from numba import njit


@njit(cache=True)
def _push(keys, vals, size, key, val):
    i = size
    while i > 0:
        p = (i - 1) >> 1
        if key < keys[p] or (key == keys[p] and val < vals[p]):
            keys[i] = keys[p]
            vals[i] = vals[p]
            i = p
        else:
            break
    keys[i] = key
    vals[i] = val
    return size + 1


@njit(cache=True)
def _pop(keys, vals, size):
    # Caller has already read keys[0], vals[0].
    size -= 1
    key = keys[size]
    val = vals[size]
    i = 0
    while True:
        c = 2 * i + 1
        if c >= size:
            break
        if c + 1 < size and (keys[c + 1] < keys[c] or (keys[c + 1] == keys[c] and vals[c + 1] < vals[c])):
            c += 1
        if keys[c] < key or (keys[c] == key and vals[c] < val):
            keys[i] = keys[c]
            vals[i] = vals[c]
            i = c
        else:
            break
    keys[i] = key
    vals[i] = val
    return size


@njit(cache=True)
def dijkstra(w, s, target, dist, pred):
    """Single-source Dijkstra over dense matrix ``w``; fills ``dist``/``pred``.

    Stops once ``target`` is settled (pass -1 to settle everything).
    ``pred[v]`` is the smallest-index settled node achieving ``dist[v]``.
    """
    n = w.shape[0]
    inf = np.inf
    for v in range(n):
        dist[v] = inf
        pred[v] = -1
    done = np.zeros(n, np.bool_)
    # Each settled node pushes each other node at most once.
    keys = np.empty(n * n + 1)
    vals = np.empty(n * n + 1, np.int64)
    dist[s] = 0.0
    size = _push(keys, vals, 0, 0.0, s)
    while size > 0:
        d = keys[0]
        u = vals[0]
        size = _pop(keys, vals, size)
        if done[u]:
            continue
        done[u] = True
        if u == target:
            break
        row = w[u]
        for v in range(n):
            c = d + row[v]
            if c < dist[v]:
                dist[v] = c
                pred[v] = u
                size = _push(keys, vals, size, c, v)
            elif c == dist[v] and c < inf and not done[v] and u < pred[v]:
                pred[v] = u


@njit(cache=True)
def dijkstra_rows(w, sources, out):
    """Write the distance row of each ``sources[r]`` into ``out[sources[r]]``."""
    n = w.shape[0]
    pred = np.empty(n, np.int64)
    for r in range(sources.shape[0]):
        s = sources[r]
        dijkstra(w, s, -1, out[s], pred)
