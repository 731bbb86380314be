"""
Strategy interfaces (no inheritance, just protocol definition)
"""

# These are just for documentation - we use duck typing
class TopologyGenerator:
    """Interface for topology families"""
    def generate(self, rng):
        """Build an nx.Graph on nodes 0..n-1 using the numpy Generator `rng`"""
        pass

    def hotspot(self, G, size):
        """Node set that the hotspot load model overloads"""
        pass

class LoadModel:
    """Interface for load models"""
    def assign(self, G, rng, hotspot):
        """Return {(u, v): load} for every edge (u < v) of G"""
        pass
