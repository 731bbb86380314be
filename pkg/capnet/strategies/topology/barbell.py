"""
Barbell: two complete blocks of `nodes` nodes joined by a path of `edge_param` inner nodes
"""
import networkx as nx

from ...core.config_models import ScenarioConfig
from ...core.errors import ScenarioError


class BarbellTopology:
    """Blocks are nodes 0..b-1 and the last b nodes; the path runs between them"""

    def __init__(self, config: ScenarioConfig):
        self.name = "barbell"
        self.description = "Two cliques joined by a path"
        path_length = int(config.edge_param)
        if config.nodes < 2:
            raise ScenarioError(f"barbell blocks need at least 2 nodes, got {config.nodes}")
        if path_length != config.edge_param or path_length < 0:
            raise ScenarioError(f"barbell needs an integer path length >= 0, got {config.edge_param}")
        self.block = config.nodes
        self.path_length = path_length

    def generate(self, rng) -> nx.Graph:
        return nx.barbell_graph(self.block, self.path_length)

    def hotspot(self, G: nx.Graph, size: int) -> set:
        # the first block, whatever size was asked for
        return set(range(self.block))


def create_barbell_topology(config: ScenarioConfig):
    return BarbellTopology(config)
