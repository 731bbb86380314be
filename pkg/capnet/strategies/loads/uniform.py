"""
Uniform loads: every link draws its load from uniform_range
"""
from ...core.config_models import ScenarioConfig


class UniformLoadModel:

    def __init__(self, config: ScenarioConfig):
        self.name = "uniform"
        self.description = "i.i.d. uniform link loads"
        self.low, self.high = config.uniform_range

    def assign(self, G, rng, hotspot=None) -> dict:
        edges = sorted((min(u, v), max(u, v)) for u, v in G.edges())
        draws = rng.uniform(self.low, self.high, size=len(edges))
        return {e: float(load) for e, load in zip(edges, draws)}


def create_uniform_load_model(config: ScenarioConfig):
    return UniformLoadModel(config)
