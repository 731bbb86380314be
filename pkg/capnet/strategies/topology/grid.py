"""
Rectangular grid: `nodes` in total, `edge_param` columns
"""
import networkx as nx

from ...core.config_models import ScenarioConfig
from ...core.errors import ScenarioError

from . import bfs_hotspot


class GridTopology:

    def __init__(self, config: ScenarioConfig):
        self.name = "grid"
        self.description = "2D grid lattice"
        columns = int(config.edge_param)
        if columns != config.edge_param or columns < 1 or config.nodes % columns:
            raise ScenarioError(
                f"grid needs an integer column count dividing nodes={config.nodes}, got {config.edge_param}"
            )
        self.rows = config.nodes // columns
        self.columns = columns

    def generate(self, rng) -> nx.Graph:
        # row-major numbering: (r, c) -> r * columns + c
        G = nx.grid_2d_graph(self.rows, self.columns)
        return nx.convert_node_labels_to_integers(G, ordering="sorted")

    def hotspot(self, G: nx.Graph, size: int) -> set:
        return bfs_hotspot(G, size)


def create_grid_topology(config: ScenarioConfig):
    return GridTopology(config)
