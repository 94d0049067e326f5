"""Random dense graphs and the warm-vs-cold timing experiments.

All randomness flows from one integer seed through numpy's ``SeedSequence``
and the PCG64 bit generator: each size gets a spawned child sequence, each
trial a grandchild, so adding sizes or trials never perturbs the others.
Only the warm and cold solver calls are timed; every trial is checked
against Floyd-Warshall before its timing is counted.
"""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, fields
from typing import Optional, Sequence

import numpy as np

from .baseline import dijkstra_apsp, floyd_warshall, shortest_path_dijkstra, warmup
from .graph_core import INF, DenseGraph, GraphError, drop_node, max_deviation
from .path_query import warm_shortest_path
from .warm_update import UpdateConfig, apsp_modify_edge, apsp_remove_node

WEIGHT_LOW = 1.0
WEIGHT_HIGH = 100.0
VERIFY_TOL = 1e-9

EXPERIMENTS = ("remove_node", "modify_edge", "path_query")


class VerificationError(RuntimeError):
    """A warm result disagreed with the cold-start oracle."""


def _rng(seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_graph(n: int, directed: bool, density: float, seed: int) -> DenseGraph:
    """Each pair gets an edge with probability ``density``, weight uniform in [1, 100]."""
    if n < 2:
        raise GraphError("gen_graph needs n >= 2")
    if not 0.0 < density <= 1.0:
        raise ValueError(f"density must lie in (0, 1], got {density}")
    rng = _rng(seed)
    w = rng.uniform(WEIGHT_LOW, WEIGHT_HIGH, size=(n, n))
    present = rng.random((n, n)) < density
    w[~present] = INF
    if not directed:
        upper = np.triu(w, 1)
        w = upper + upper.T
    np.fill_diagonal(w, 0.0)
    return DenseGraph(w, directed)


@dataclass(frozen=True)
class BenchReport:
    experiment: str
    n: int
    trials: int
    ratio_fw: Optional[float]
    ratio_dij: float
    seed: int
    warm_ns: int
    cold_fw_ns: Optional[int]
    cold_dij_ns: int
    strategies: tuple = ()

    def to_dict(self) -> dict:
        d = asdict(self)
        d["strategies"] = list(self.strategies)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "BenchReport":
        d = dict(d)
        d["strategies"] = tuple(d.get("strategies", ()))
        return cls(**d)


CSV_COLUMNS = [f.name for f in fields(BenchReport)]

_INT_FIELDS = {"n", "trials", "seed", "warm_ns", "cold_fw_ns", "cold_dij_ns"}
_FLOAT_FIELDS = {"ratio_fw", "ratio_dij"}


def _ratio(warm_ns: int, cold_ns: int) -> float:
    return warm_ns / max(cold_ns, 1)


def reports_to_csv(reports: Sequence[BenchReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = {}
        for key, value in r.to_dict().items():
            if value is None:
                row[key] = ""
            elif key == "strategies":
                row[key] = ";".join(value)
            elif isinstance(value, float):
                row[key] = repr(value)
            else:
                row[key] = value
        writer.writerow(row)
    return buf.getvalue()


def reports_from_csv(text: str) -> list:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        d = {}
        for key in CSV_COLUMNS:
            raw = row[key]
            if key == "strategies":
                d[key] = tuple(raw.split(";")) if raw else ()
            elif raw == "":
                d[key] = None
            elif key in _INT_FIELDS:
                d[key] = int(raw)
            elif key in _FLOAT_FIELDS:
                d[key] = float(raw)
            else:
                d[key] = raw
        out.append(BenchReport(**d))
    return out


def reports_to_json(reports: Sequence[BenchReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def reports_from_json(text: str) -> list:
    return [BenchReport.from_dict(d) for d in json.loads(text)]


def _check_trials(trials: int, sizes=None) -> None:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if sizes is not None and not sizes:
        raise ValueError("at least one graph size is required")


def _verify(label: str, warm, oracle, tol: float = VERIFY_TOL) -> None:
    dev = max_deviation(warm.dist, oracle.dist)
    if not dev <= tol:
        raise VerificationError(f"{label}: warm result deviates from Floyd-Warshall by {dev}")


def _timed(fn, *args):
    t0 = time.perf_counter_ns()
    out = fn(*args)
    return out, time.perf_counter_ns() - t0


def _graph_seed(seq: np.random.SeedSequence) -> int:
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def _trial_seeds(seed: int, sizes: Sequence[int], trials: int):
    for size_seq, n in zip(np.random.SeedSequence(seed).spawn(len(sizes)), sizes):
        yield n, size_seq.spawn(trials)


def _run_mutation_experiment(name, sizes, trials, cfg, seed, directed, density, mutate):
    _check_trials(trials, sizes)
    warmup()
    reports = []
    for n, trial_seqs in _trial_seeds(seed, sizes, trials):
        warm_ns = fw_ns = dij_ns = 0
        strategies = []
        for seq in trial_seqs:
            graph_seq, mutation_seq = seq.spawn(2)
            g = gen_graph(n, directed, density, _graph_seed(graph_seq))
            m = floyd_warshall(g)
            rng = _rng(mutation_seq)
            (warm, g2, strategy), t_warm = mutate(m, g, rng, cfg)
            cold_fw, t_fw = _timed(floyd_warshall, g2)
            cold_dij, t_dij = _timed(dijkstra_apsp, g2)
            _verify(f"{name} n={n}", warm, cold_fw)
            _verify(f"{name} n={n} (dijkstra)", cold_dij, cold_fw)
            warm_ns += t_warm
            fw_ns += t_fw
            dij_ns += t_dij
            strategies.append(strategy)
        reports.append(BenchReport(
            experiment=name, n=n, trials=trials,
            ratio_fw=_ratio(warm_ns, fw_ns), ratio_dij=_ratio(warm_ns, dij_ns),
            seed=seed, warm_ns=warm_ns, cold_fw_ns=fw_ns, cold_dij_ns=dij_ns,
            strategies=tuple(strategies),
        ))
    return reports


def _remove_random_node(m, g, rng, cfg):
    k = int(rng.integers(g.n))
    res, t = _timed(apsp_remove_node, m, g, k, cfg)
    return (res.matrix, drop_node(g, k), res.strategy), t


def _modify_random_edge(m, g, rng, cfg):
    u, v = (int(x) for x in rng.choice(g.n, size=2, replace=False))
    w_new = float(rng.uniform(WEIGHT_LOW, WEIGHT_HIGH))
    res, t = _timed(apsp_modify_edge, m, g, u, v, w_new, cfg)
    return (res.matrix, res.graph, res.strategy), t


def run_experiment_1(sizes, trials, cfg: UpdateConfig = UpdateConfig(), seed: int = 0,
                     directed: bool = True, density: float = 1.0) -> list:
    """Warm node removal against cold Floyd-Warshall and all-sources Dijkstra."""
    return _run_mutation_experiment("remove_node", list(sizes), trials, cfg, seed,
                                    directed, density, _remove_random_node)


def run_experiment_2(sizes, trials, cfg: UpdateConfig = UpdateConfig(), seed: int = 0,
                     directed: bool = True, density: float = 1.0) -> list:
    """Warm single-edge reweighting against the same cold baselines."""
    return _run_mutation_experiment("modify_edge", list(sizes), trials, cfg, seed,
                                    directed, density, _modify_random_edge)


def run_experiment_3(n: int, queries: int, cfg: UpdateConfig = UpdateConfig(), seed: int = 0,
                     directed: bool = True, density: float = 1.0) -> BenchReport:
    """Warm point-to-point queries against cold single-pair Dijkstra."""
    _check_trials(queries)
    warmup()
    graph_seq, query_seq = np.random.SeedSequence(seed).spawn(2)
    g = gen_graph(n, directed, density, _graph_seed(graph_seq))
    m = floyd_warshall(g)
    rng = _rng(query_seq)
    warm_ns = cold_ns = 0
    for _ in range(queries):
        i, j = (int(x) for x in rng.choice(n, size=2, replace=False))
        warm, t_warm = _timed(warm_shortest_path, m, g, i, j, cfg)
        cold, t_cold = _timed(shortest_path_dijkstra, g, i, j)
        if warm.found != cold.found or (warm.found and abs(warm.total - cold.total) > VERIFY_TOL):
            raise VerificationError(
                f"path_query ({i}, {j}): warm total {warm.total} != cold total {cold.total}")
        if warm.found and abs(warm.total - m.dist[i, j]) > VERIFY_TOL:
            raise VerificationError(f"path_query ({i}, {j}): total disagrees with the matrix")
        warm_ns += t_warm
        cold_ns += t_cold
    return BenchReport(
        experiment="path_query", n=n, trials=queries,
        ratio_fw=None, ratio_dij=_ratio(warm_ns, cold_ns),
        seed=seed, warm_ns=warm_ns, cold_fw_ns=None, cold_dij_ns=cold_ns,
    )
