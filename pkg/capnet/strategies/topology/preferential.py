"""
Preferential attachment (Barabasi-Albert) graphs, which grow a non-trivial core hierarchy
"""
import networkx as nx

from ...core.config_models import ScenarioConfig
from ...core.errors import ScenarioError

from . import bfs_hotspot, networkx_seed


class PreferentialTopology:
    """Each new node attaches to edge_param existing nodes, chosen proportionally to degree"""

    def __init__(self, config: ScenarioConfig):
        self.name = "preferential_attachment"
        self.description = "Barabasi-Albert preferential attachment"
        attachments = int(config.edge_param)
        if attachments != config.edge_param or not 1 <= attachments < config.nodes:
            raise ScenarioError(
                f"preferential_attachment needs an integer 1 <= edge_param < nodes, got {config.edge_param}"
            )
        self.config = config
        self.attachments = attachments

    def generate(self, rng) -> nx.Graph:
        return nx.barabasi_albert_graph(self.config.nodes, self.attachments, seed=networkx_seed(rng))

    def hotspot(self, G: nx.Graph, size: int) -> set:
        return bfs_hotspot(G, size)


def create_preferential_topology(config: ScenarioConfig):
    return PreferentialTopology(config)
