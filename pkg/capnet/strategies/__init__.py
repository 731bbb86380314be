"""
Strategy registry and factory for scenario generation
(topology families and load models, configured by ScenarioConfig)
"""

from .base import LoadModel, TopologyGenerator

# Registry of available strategies
_TOPOLOGIES = {}
_LOAD_MODELS = {}

def register_topology(name: str, factory):
    _TOPOLOGIES[name] = factory

def register_load_model(name: str, factory):
    _LOAD_MODELS[name] = factory

def get_topology(name: str, config: object) -> TopologyGenerator:
    """Get topology generator by name - passes config to factory"""
    if name not in _TOPOLOGIES:
        raise ValueError(f"Unknown topology: {name}")
    return _TOPOLOGIES[name](config)

def get_load_model(name: str, config: object) -> LoadModel:
    """Get load model by name - passes config to factory"""
    if name not in _LOAD_MODELS:
        raise ValueError(f"Unknown load model: {name}")
    return _LOAD_MODELS[name](config)

def list_available_strategies():
    """List all available strategies"""
    return {
        "topology": list(_TOPOLOGIES.keys()),
        "load_model": list(_LOAD_MODELS.keys())
    }

# Auto-register strategies using factory functions
from .topology.random_uniform import create_random_uniform_topology
from .topology.preferential import create_preferential_topology
from .topology.grid import create_grid_topology
from .topology.barbell import create_barbell_topology
from .loads.uniform import create_uniform_load_model
from .loads.hotspot import create_hotspot_load_model

register_topology('random_uniform', create_random_uniform_topology)
register_topology('preferential_attachment', create_preferential_topology)
register_topology('grid', create_grid_topology)
register_topology('barbell', create_barbell_topology)
register_load_model('uniform', create_uniform_load_model)
register_load_model('hotspot', create_hotspot_load_model)
