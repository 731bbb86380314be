"""
Scenario generation and the local-vs-global routing comparison.
"""
from .comparison import ComparisonReport, PolicyComparison, compare_policies
from .scenario import generate_scenario, node_labels, sample_queries

__all__ = [
    "ComparisonReport",
    "PolicyComparison",
    "compare_policies",
    "generate_scenario",
    "node_labels",
    "sample_queries",
]
