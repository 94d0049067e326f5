import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_weights
from warm_apsp.graph_core import (
    INF,
    ApspMatrix,
    DenseGraph,
    GraphError,
    append_node,
    check_weight,
    dist_equal,
    drop_node,
    max_deviation,
    new_graph,
    removal_index_map,
    sat_add,
    set_weight,
)


def test_new_graph_single_node():
    g = new_graph(1, directed=False)
    assert g.weights.tolist() == [[0.0]]


def test_new_graph_directed_pair_has_no_edges():
    g = new_graph(2, directed=True)
    assert g.weights.tolist() == [[0.0, INF], [INF, 0.0]]


def test_new_graph_rejects_empty():
    with pytest.raises(GraphError):
        new_graph(0, directed=True)


def test_set_weight_undirected_mirrors():
    g = set_weight(new_graph(3, directed=False), 0, 1, 5)
    assert g.weights[1, 0] == 5
    assert g.weights[0, 1] == 5


def test_set_weight_directed_touches_one_entry():
    g0 = new_graph(3, directed=True)
    g = set_weight(g0, 0, 1, 5)
    changed = np.argwhere(g.weights != g0.weights)
    assert changed.tolist() == [[0, 1]]


def test_set_weight_inf_deletes_edge():
    g = set_weight(new_graph(3, directed=True), 0, 1, 5)
    g = set_weight(g, 0, 1, INF)
    assert g.weights[0, 1] == INF


def test_set_weight_diagonal_rejected():
    with pytest.raises(GraphError):
        set_weight(new_graph(3, directed=True), 0, 0, 1)


@pytest.mark.parametrize("w", [-1.0, float("nan")])
def test_set_weight_rejects_bad_weights(w):
    with pytest.raises(GraphError):
        set_weight(new_graph(3, directed=True), 0, 1, w)


def test_zero_weight_edges_allowed():
    g = set_weight(new_graph(2, directed=True), 0, 1, 0)
    assert g.weights[0, 1] == 0


@pytest.mark.parametrize("k", [-1, 3, 1.0, True])
def test_out_of_range_node_ids_are_errors(k):
    with pytest.raises(GraphError):
        set_weight(new_graph(3, directed=True), k, 0, 1)


def test_graph_constructor_validates():
    with pytest.raises(GraphError):
        DenseGraph(np.array([[0.0, 1.0], [2.0, 0.0]]), directed=False)
    with pytest.raises(GraphError):
        DenseGraph(np.array([[1.0, 1.0], [1.0, 0.0]]), directed=True)
    with pytest.raises(GraphError):
        DenseGraph(np.array([[0.0, -1.0], [1.0, 0.0]]), directed=True)
    with pytest.raises(GraphError):
        DenseGraph(np.zeros((2, 3)), directed=True)


def test_graph_weights_are_read_only():
    g = new_graph(2, directed=True)
    with pytest.raises(ValueError):
        g.weights[0, 1] = 3.0


def test_drop_node_middle():
    w = np.arange(9, dtype=float).reshape(3, 3)
    np.fill_diagonal(w, 0)
    g = drop_node(DenseGraph(w, directed=True), 1)
    assert g.weights.tolist() == [[0.0, 2.0], [6.0, 0.0]]


def test_drop_last_node():
    rng = np.random.default_rng(3)
    w = random_weights(rng, 5, True, 0.8)
    g = drop_node(DenseGraph(w, True), 4)
    assert np.array_equal(g.weights, w[:4, :4])


def test_drop_node_matches_direct_construction():
    rng = np.random.default_rng(4)
    for _ in range(20):
        n = int(rng.integers(2, 9))
        directed = bool(rng.integers(2))
        w = random_weights(rng, n, directed, 0.7)
        k = int(rng.integers(n))
        survivors = [m for m in range(n) if m != k]
        direct = DenseGraph(w[np.ix_(survivors, survivors)].copy(), directed)
        assert drop_node(DenseGraph(w, directed), k) == direct


def test_drop_only_node_rejected():
    with pytest.raises(GraphError):
        drop_node(new_graph(1, directed=True), 0)


def test_drop_node_keeps_labels_aligned():
    g = new_graph(3, directed=True, labels=["a", "b", "c"])
    assert drop_node(g, 1).labels == ("a", "c")
    assert append_node(g, [1, 2, 3], [1, 2, 3], label="d").labels == ("a", "b", "c", "d")


def test_removal_index_map_is_bijection():
    mapping = removal_index_map(6, 2)
    assert sorted(mapping.values()) == list(range(5))
    assert mapping == {0: 0, 1: 1, 3: 2, 4: 3, 5: 4}


def test_append_isolated_node():
    g = append_node(new_graph(2, directed=True), [INF, INF], [INF, INF])
    assert g.n == 3
    assert g.weights[2].tolist() == [INF, INF, 0.0]


def test_append_orientation():
    g = append_node(new_graph(1, directed=True), [3], [4])
    # row of the new node holds d(p, G_0) = 3
    assert g.weights.tolist() == [[0.0, 4.0], [3.0, 0.0]]


def test_append_errors():
    g = new_graph(2, directed=False)
    with pytest.raises(GraphError):
        append_node(g, [1], [1])
    with pytest.raises(GraphError):
        append_node(g, [1, 2], [2, 1])
    with pytest.raises(GraphError):
        append_node(g, [1, -2], [1, -2])


def test_append_then_drop_round_trip():
    rng = np.random.default_rng(5)
    for directed in (True, False):
        g = DenseGraph(random_weights(rng, 6, directed, 0.6), directed)
        out = rng.uniform(1, 10, 6)
        back = out if not directed else rng.uniform(1, 10, 6)
        g2 = drop_node(append_node(g, out, back), 6)
        assert g2 == g
        assert g2.weights.tobytes() == g.weights.tobytes()


def test_check_weight():
    assert check_weight(3) == 3.0
    assert check_weight(INF) == INF
    with pytest.raises(GraphError):
        check_weight(-0.5)


def test_dist_equal_handles_infinity():
    assert dist_equal(INF, INF)
    assert not dist_equal(INF, 1e300)
    assert dist_equal(1.0, 1.0 + 1e-12)
    assert not dist_equal(1.0, 1.0 + 1e-6)


def test_max_deviation_flags_infinity_mismatch():
    a = np.array([[0.0, 1.0], [INF, 0.0]])
    b = np.array([[0.0, 1.0], [5.0, 0.0]])
    assert max_deviation(a, a) == 0.0
    assert max_deviation(a, b) == INF


def test_apsp_matrix_is_read_only():
    m = ApspMatrix(np.zeros((2, 2)))
    with pytest.raises(ValueError):
        m.dist[0, 1] = 1.0


weights = st.one_of(st.integers(0, 10**6).map(float), st.just(INF))


@given(st.lists(weights, min_size=1, max_size=6))
def test_sat_add_infinity_absorbs(xs):
    assert (sat_add(*xs) == INF) == (INF in xs)


@given(weights, weights, weights)
def test_sat_add_associative_commutative(a, b, c):
    # integer-valued samples keep float addition exact
    assert sat_add(a, b) == sat_add(b, a)
    assert sat_add(sat_add(a, b), c) == sat_add(a, sat_add(b, c))


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 7), st.integers(0, 2**32 - 1))
def test_undirected_stays_symmetric_under_mutation(n, seed):
    rng = np.random.default_rng(seed)
    g = DenseGraph(random_weights(rng, n, False, 0.5), False)
    i, j = (int(x) for x in rng.choice(n, 2, replace=False))
    g = set_weight(g, i, j, float(rng.uniform(0, 5)))
    vec = rng.uniform(0, 5, n)
    g = append_node(g, vec, vec)
    g = drop_node(g, int(rng.integers(g.n)))
    assert np.array_equal(g.weights, g.weights.T)
    assert math.isfinite(g.weights.trace()) and g.weights.trace() == 0
