"""
Brute-force ground truth on small graphs.

Everything here is exhaustive enumeration: every node subset, every simple
path. Slow by construction and easy to check by eye.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional, Tuple

import networkx as nx

from .dense_subgraphs import DenseCover
from .density import DEFAULT_MAX_CLIQUE_K, DensityValue, MeasureExpr, eval_measure
from .errors import OracleSizeError
from .graph import CONGESTION_STRICT, Graph, LoadedGraph, SubgraphRef, congested_core, induced_subgraph
from .routing import NoPathReason, Path, RouteOutcome, WeightPolicy, edge_weights, check_endpoints

MAX_SUBSET_NODES = 15
MAX_PATH_NODES = 12

MISSING_FROM_COVER = "missing_from_cover"
EXTRA_IN_COVER = "extra_in_cover"


@dataclass(frozen=True)
class QualifyingSubgraph:
    nodes: SubgraphRef
    density: DensityValue


@dataclass(frozen=True)
class OracleReport:
    instance: str
    qualifying: Tuple[QualifyingSubgraph, ...]
    exact_cover: SubgraphRef
    discrepancies: Tuple[Tuple[int, str], ...] = ()

    @property
    def sound(self) -> bool:
        return all(direction != MISSING_FROM_COVER for _, direction in self.discrepancies)

    @property
    def gap(self) -> int:
        """Nodes the checked cover holds beyond the exact one."""
        return sum(1 for _, direction in self.discrepancies if direction == EXTRA_IN_COVER)


def _check_size(n: int, limit: int, what: str):
    if n > limit:
        raise OracleSizeError(f"{what} limited to {limit} nodes, graph has {n}")


@lru_cache(maxsize=128)
def subset_densities(g: Graph, m: MeasureExpr,
                     max_clique_k: int = DEFAULT_MAX_CLIQUE_K) -> Tuple[Tuple[SubgraphRef, Fraction], ...]:
    """Density of every nonempty induced subgraph, by size then node order."""
    table = []
    for size in range(1, g.node_count + 1):
        for nodes in combinations(g.nodes(), size):
            nodes = frozenset(nodes)
            table.append((nodes, eval_measure(m, induced_subgraph(g, nodes), max_clique_k)))
    return tuple(table)


def enumerate_dense(g: Graph, m: MeasureExpr, rho0: DensityValue,
                    max_nodes: int = MAX_SUBSET_NODES,
                    max_clique_k: int = DEFAULT_MAX_CLIQUE_K) -> OracleReport:
    """Every subgraph S of g with m(S) >= rho0, and their union."""
    _check_size(g.node_count, min(max_nodes, MAX_SUBSET_NODES), "subset enumeration")
    rho0 = Fraction(rho0)
    qualifying = tuple(
        QualifyingSubgraph(nodes, value)
        for nodes, value in subset_densities(g, m, max_clique_k)
        if value >= rho0
    )
    return OracleReport(
        instance=f"n={g.node_count} m={g.edge_count} rho0={rho0}",
        qualifying=qualifying,
        exact_cover=frozenset().union(*(q.nodes for q in qualifying)),
    )


def check_cover(g: Graph, cover: DenseCover, max_nodes: int = MAX_SUBSET_NODES) -> OracleReport:
    """Compare a computed cover against the exhaustive one."""
    report = enumerate_dense(g, cover.measure, cover.rho0, max_nodes)
    missing = sorted(report.exact_cover - cover.cover)
    extra = sorted(cover.cover - report.exact_cover)
    discrepancies = tuple([(v, MISSING_FROM_COVER) for v in missing] + [(v, EXTRA_IN_COVER) for v in extra])
    return OracleReport(
        instance=report.instance,
        qualifying=report.qualifying,
        exact_cover=report.exact_cover,
        discrepancies=discrepancies,
    )


def brute_force_cap(g: LoadedGraph, threshold: float, m: MeasureExpr, rho0: DensityValue,
                    s: int, t: int, weights: WeightPolicy = WeightPolicy.UNIT,
                    max_nodes: int = MAX_PATH_NODES,
                    strict: bool = CONGESTION_STRICT) -> RouteOutcome:
    """Cheapest simple s-t path avoiding every qualifying subgraph of C(G), by enumeration."""
    _check_size(g.graph.node_count, min(max_nodes, MAX_PATH_NODES), "path enumeration")
    check_endpoints(g.graph, s, t)
    core = congested_core(g, threshold, strict)
    forbidden = core.to_original(enumerate_dense(core.core, m, rho0).exact_cover)
    if s in forbidden or t in forbidden:
        return RouteOutcome.no_path(NoPathReason.ENDPOINT_REMOVED)

    weight_of = dict(zip(g.graph.edges, edge_weights(g, weights)))
    best: Optional[Tuple[float, Tuple[int, ...]]] = None
    allowed = g.graph.to_networkx().subgraph(v for v in g.graph.nodes() if v not in forbidden)
    for nodes in nx.all_simple_paths(allowed, s, t):
        weight = sum(weight_of[(min(u, v), max(u, v))] for u, v in zip(nodes, nodes[1:]))
        candidate = (weight, tuple(nodes))
        if best is None or candidate < best:
            best = candidate
    if best is None:
        return RouteOutcome.no_path(NoPathReason.DISCONNECTED)
    return RouteOutcome.found_path(Path(nodes=best[1], weight=best[0]))


def brute_force_clique_number(g: Graph, max_nodes: int = MAX_SUBSET_NODES) -> int:
    """Size of a maximum clique, trying the largest sizes first."""
    _check_size(g.node_count, min(max_nodes, MAX_SUBSET_NODES), "clique search")
    for size in range(g.node_count, 1, -1):
        candidates = [v for v in g.nodes() if g.degree(v) >= size - 1]
        for nodes in combinations(candidates, size):
            if all(g.has_edge(u, v) for u, v in combinations(nodes, 2)):
                return size
    return 1 if g.node_count else 0
