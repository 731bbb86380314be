"""
Synthetic instances: a topology family plus a load model, fully determined by the seed.
"""
from typing import List, Tuple

import numpy as np

from ..core.config_models import ScenarioConfig
from ..core.graph import LoadedGraph
from ..strategies import get_load_model, get_topology
from ..strategies.base import LoadModel, TopologyGenerator


def node_labels(n: int) -> List[str]:
    """n0, n1, ... zero-padded so label order matches index order."""
    width = len(str(max(n - 1, 0)))
    return [f"n{i:0{width}d}" for i in range(n)]


def default_hotspot_size(n: int) -> int:
    return max(2, n // 4)


def generate_scenario(cfg: ScenarioConfig) -> LoadedGraph:
    rng = np.random.default_rng(cfg.seed)
    topology: TopologyGenerator = get_topology(cfg.topology, cfg)
    load_model: LoadModel = get_load_model(cfg.load_model, cfg)

    G = topology.generate(rng)
    hotspot = topology.hotspot(G, cfg.hotspot_size or default_hotspot_size(G.number_of_nodes()))
    loads = load_model.assign(G, rng, hotspot)
    return LoadedGraph.from_labelled_edges(
        node_labels(G.number_of_nodes()),
        [(u, v, loads[(u, v)]) for u, v in sorted(loads)],
    )


def sample_queries(g: LoadedGraph, count: int, seed: int) -> List[Tuple[int, int]]:
    """`count` ordered (s, t) pairs of distinct nodes, drawn independently of the instance."""
    n = g.graph.node_count
    if n < 2:
        return []
    rng = np.random.default_rng([seed, 1])
    queries = []
    for _ in range(count):
        s, t = rng.choice(n, size=2, replace=False)
        queries.append((int(s), int(t)))
    return queries
