"""
Hotspot loads: links inside a designated region run hot, the rest stay cool
"""
from ...core.config_models import ScenarioConfig
from ...core.errors import ScenarioError
from ...core.graph import is_congested


class HotspotLoadModel:
    """
    Links with both ends in the hotspot draw from high_band, all others from
    low_band. The bands must straddle the threshold so that the congested
    core is exactly the hotspot's internal links.
    """

    def __init__(self, config: ScenarioConfig):
        self.name = "hotspot"
        self.description = "Overloaded region inside a lightly loaded network"
        self.high_band = config.high_band
        self.low_band = config.low_band
        threshold = config.threshold
        if not is_congested(self.high_band[0], threshold):
            raise ScenarioError(
                f"high_band {self.high_band} must lie above the threshold {threshold}"
            )
        if is_congested(self.low_band[1], threshold):
            raise ScenarioError(
                f"low_band {self.low_band} must not exceed the threshold {threshold}"
            )

    def assign(self, G, rng, hotspot) -> dict:
        edges = sorted((min(u, v), max(u, v)) for u, v in G.edges())
        loads = {}
        for (u, v), draw in zip(edges, rng.random(size=len(edges))):
            low, high = self.high_band if u in hotspot and v in hotspot else self.low_band
            loads[(u, v)] = float(low + (high - low) * draw)
        return loads


def create_hotspot_load_model(config: ScenarioConfig):
    return HotspotLoadModel(config)
