"""
Uniform random graphs G(n, p)
"""
import networkx as nx

from ...core.config_models import ScenarioConfig
from ...core.errors import ScenarioError

from . import bfs_hotspot, networkx_seed


class RandomUniformTopology:
    """Every pair of nodes is linked independently with probability p = edge_param"""

    def __init__(self, config: ScenarioConfig):
        self.name = "random_uniform"
        self.description = "Erdos-Renyi G(n, p)"
        if not 0.0 <= config.edge_param <= 1.0:
            raise ScenarioError(f"random_uniform needs 0 <= edge_param <= 1, got {config.edge_param}")
        self.config = config

    def generate(self, rng) -> nx.Graph:
        return nx.gnp_random_graph(self.config.nodes, self.config.edge_param, seed=networkx_seed(rng))

    def hotspot(self, G: nx.Graph, size: int) -> set:
        return bfs_hotspot(G, size)


def create_random_uniform_topology(config: ScenarioConfig):
    return RandomUniformTopology(config)
