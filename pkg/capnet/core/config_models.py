"""
Pydantic models for validating the capnet.yaml settings file.
"""
from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator

# --- Congestion filter ---

class CongestionConfig(BaseModel):
    threshold: float = Field(0.7, ge=0.0)
    strict: bool = True  # load > threshold; False means load >= threshold

# --- Density measures ---

class DensityConfig(BaseModel):
    max_clique_k: int = Field(6, ge=2)

# --- Routing ---

class RoutingConfig(BaseModel):
    weight_policy: Literal["unit", "load"] = "unit"
    scope: Literal["full", "core"] = "full"

# --- Oracle ---

class OracleConfig(BaseModel):
    max_subset_nodes: int = Field(15, ge=1, le=15)
    max_path_nodes: int = Field(12, ge=2, le=12)

# --- Logging ---

class LoggingConfig(BaseModel):
    log_dir: str = "logs"
    max_logs: int = 50
    to_file: bool = False
    level: Literal["debug", "info", "warning", "error"] = "info"

# --- Simulation scenario ---

class ScenarioConfig(BaseModel):
    """One synthetic instance plus the routing queries to run on it."""
    topology: Literal["random_uniform", "preferential_attachment", "grid", "barbell"] = "barbell"
    nodes: int = Field(4, ge=1)          # barbell: block size; grid: total nodes
    edge_param: float = 2.0              # p | attachments m | grid columns | barbell path length
    load_model: Literal["uniform", "hotspot"] = "hotspot"
    uniform_range: Tuple[float, float] = (0.0, 0.5)
    high_band: Tuple[float, float] = (0.8, 0.95)
    low_band: Tuple[float, float] = (0.1, 0.5)
    hotspot_size: Optional[int] = Field(None, ge=1)
    threshold: float = Field(0.7, ge=0.0)
    measure: str = "mindeg"
    rho0: Union[int, float, str] = 2
    weight_policy: Literal["unit", "load"] = "unit"
    queries: int = Field(10, ge=0)
    seed: int = 0
    pairs: Optional[List[Tuple[str, str]]] = None  # fixed (source, target) labels; replaces the sampled queries

    @field_validator("uniform_range", "high_band", "low_band")
    @classmethod
    def _ordered_band(cls, band):
        low, high = band
        if low < 0 or high < low:
            raise ValueError(f"band must satisfy 0 <= low <= high, got {band}")
        return band

    @field_validator("pairs")
    @classmethod
    def _distinct_endpoints(cls, pairs):
        for s, t in pairs or ():
            if s == t:
                raise ValueError(f"query endpoints must differ, got {s!r} twice")
        return pairs

# --- Top-Level Settings Model ---

class Settings(BaseModel):
    """The root model for the entire capnet.yaml."""
    congestion: CongestionConfig = Field(default_factory=CongestionConfig)
    density: DensityConfig = Field(default_factory=DensityConfig)
    routing: RoutingConfig = Field(default_factory=RoutingConfig)
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    simulation: ScenarioConfig = Field(default_factory=ScenarioConfig)
