"""
Routing: shortest paths, paths with a prescribed density index, CAP routing
and the density index of a given path.
"""
import heapq
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .dense_subgraphs import (
    DenseCover, Exactness, degeneracy, density_candidates, dense_cover, max_edge_density,
    maximal_k_edge_connected,
)
from .density import DensityValue, Leaf, MeasureExpr, MeasureKind
from .errors import InvalidPathError, NegativeWeightError, UnknownNodeError
from .graph import CONGESTION_STRICT, CongestedCore, Graph, LoadedGraph, congested_core


class WeightPolicy(str, Enum):
    UNIT = "unit"
    LOAD = "load"


class RouteScope(str, Enum):
    FULL = "full"   # remove the cover from G
    CORE = "core"   # route inside C(G) minus the cover


class NoPathReason(str, Enum):
    ENDPOINT_REMOVED = "endpoint_removed"
    DISCONNECTED = "disconnected"


@dataclass(frozen=True)
class Path:
    nodes: Tuple[int, ...]
    weight: float

    @property
    def hops(self) -> int:
        return len(self.nodes) - 1


@dataclass(frozen=True)
class RouteOutcome:
    path: Optional[Path] = None
    reason: Optional[NoPathReason] = None
    certified: bool = True

    @property
    def found(self) -> bool:
        return self.path is not None

    @classmethod
    def found_path(cls, path: Path, certified: bool = True) -> "RouteOutcome":
        return cls(path=path, certified=certified)

    @classmethod
    def no_path(cls, reason: NoPathReason, certified: bool = True) -> "RouteOutcome":
        return cls(reason=reason, certified=certified)


@dataclass(frozen=True)
class DensityIndexResult:
    value: DensityValue
    grid: Tuple[DensityValue, ...]


@dataclass(frozen=True)
class AvoidancePlan:
    """The congested core, its dense cover, and the cover's nodes in G."""
    core: CongestedCore
    cover: DenseCover
    removed: frozenset

    @property
    def certified(self) -> bool:
        return self.cover.exactness is Exactness.EXACT


def edge_weights(g: LoadedGraph, policy: WeightPolicy = WeightPolicy.UNIT) -> Tuple[float, ...]:
    """Per-edge weights aligned with `g.graph.edges`."""
    if WeightPolicy(policy) is WeightPolicy.LOAD:
        return tuple(g.loads)
    return tuple(1 for _ in g.graph.edges)


def check_endpoints(g: Graph, s: int, t: int):
    for v in (s, t):
        if not g.has_node(v):
            raise UnknownNodeError(v)
    if s == t:
        raise InvalidPathError("source and target must be distinct")


def dijkstra(g: Graph, weights: Sequence[float], s: int, t: int) -> RouteOutcome:
    """
    Minimum-weight s-t path.

    Heap keys are (distance, node sequence), so among equal-weight paths the
    lexicographically smallest sequence of node indices wins.
    """
    check_endpoints(g, s, t)
    if len(weights) != g.edge_count:
        raise ValueError("one weight per edge is required")
    adjacency: Dict[int, list] = {v: [] for v in g.nodes()}
    for (u, v), w in zip(g.edges, weights):
        if w < 0:
            raise NegativeWeightError(f"negative weight {w} on '{g.labels[u]}'-'{g.labels[v]}'")
        adjacency[u].append((v, w))
        adjacency[v].append((u, w))

    best = {s: (0, (s,))}
    heap = [(0, (s,))]
    settled = set()
    while heap:
        dist, path = heapq.heappop(heap)
        u = path[-1]
        if u in settled:
            continue
        settled.add(u)
        if u == t:
            return RouteOutcome.found_path(Path(nodes=path, weight=dist))
        for v, w in adjacency[u]:
            if v in settled or v in path:
                continue
            key = (dist + w, path + (v,))
            if v not in best or key < best[v]:
                best[v] = key
                heapq.heappush(heap, key)
    return RouteOutcome.no_path(NoPathReason.DISCONNECTED, certified=True)


def plan_avoidance(g: LoadedGraph, threshold: float, m: MeasureExpr, rho0: DensityValue,
                   strict: bool = CONGESTION_STRICT) -> AvoidancePlan:
    """Filter to C(G), list its dense cover, and map the cover back into G."""
    core = congested_core(g, threshold, strict)
    cover = dense_cover(core.core, m, rho0)
    return AvoidancePlan(core=core, cover=cover, removed=core.to_original(cover.cover))


def route_avoiding(g: LoadedGraph, plan: AvoidancePlan, s: int, t: int,
                   weights: WeightPolicy = WeightPolicy.UNIT,
                   scope: RouteScope = RouteScope.FULL) -> RouteOutcome:
    """Shortest s-t path in G (or C(G)) with the plan's cover removed."""
    check_endpoints(g.graph, s, t)
    certified = plan.certified
    if s in plan.removed or t in plan.removed:
        return RouteOutcome.no_path(NoPathReason.ENDPOINT_REMOVED, certified)

    if RouteScope(scope) is RouteScope.CORE:
        host = plan.core.as_loaded()
        keep = [v for v in host.graph.nodes() if v not in plan.cover.cover]
        labels = (g.graph.labels[s], g.graph.labels[t])
        if not all(host.graph.contains_label(label) for label in labels):
            return RouteOutcome.no_path(NoPathReason.DISCONNECTED, certified)
        remaining = host.induced(keep)
    else:
        remaining = g.induced(v for v in g.graph.nodes() if v not in plan.removed)

    sub = remaining.graph
    outcome = dijkstra(sub, edge_weights(remaining, weights),
                       sub.index_of(g.graph.labels[s]), sub.index_of(g.graph.labels[t]))
    if not outcome.found:
        return RouteOutcome.no_path(NoPathReason.DISCONNECTED, certified)
    nodes = tuple(g.graph.index_of(sub.labels[v]) for v in outcome.path.nodes)
    return RouteOutcome.found_path(Path(nodes=nodes, weight=outcome.path.weight), certified)


def route_with_density_index(g: LoadedGraph, threshold: float, m: MeasureExpr, rho0: DensityValue,
                             s: int, t: int, weights: WeightPolicy = WeightPolicy.UNIT,
                             scope: RouteScope = RouteScope.FULL,
                             strict: bool = CONGESTION_STRICT) -> RouteOutcome:
    """An s-t path avoiding every subgraph of C(G) with density >= rho0, or a no-path verdict."""
    check_endpoints(g.graph, s, t)
    plan = plan_avoidance(g, threshold, m, rho0, strict)
    return route_avoiding(g, plan, s, t, weights, scope)


def _integer_max(core: Graph, leaf: Leaf) -> int:
    if leaf.kind is MeasureKind.MIN_DEGREE:
        return degeneracy(core)
    for k in range(degeneracy(core), 0, -1):
        if maximal_k_edge_connected(core, k):
            return k
    return 0


def _first_true(grid: Sequence[Fraction], predicate) -> int:
    """Smallest index with predicate true; predicate is monotone and true at the end."""
    lo, hi = 0, len(grid) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if predicate(grid[mid]):
            hi = mid
        else:
            lo = mid + 1
    return lo


def max_density(core: Graph, m: MeasureExpr) -> Fraction:
    """rho* = the largest density of any subgraph of `core` under m."""
    if core.node_count == 0:
        return Fraction(0)
    if isinstance(m, Leaf):
        if m.kind is MeasureKind.EDGE_DENSITY:
            return max_edge_density(core)
        if m.kind in (MeasureKind.MIN_DEGREE, MeasureKind.EDGE_CONNECTIVITY):
            return Fraction(_integer_max(core, m))
        dense_cover(core, m, 0)  # raises for measures without a listing algorithm
    grid = candidate_grid(core, m)
    i = _first_true(grid, lambda rho: not dense_cover(core, m, rho).cover)
    return grid[i - 1]


def candidate_grid(core: Graph, m: MeasureExpr) -> Tuple[Fraction, ...]:
    """Thresholds at which the cover can change, ending with one where it is empty."""
    if isinstance(m, Leaf):
        if m.kind is MeasureKind.EDGE_DENSITY:
            top = max_edge_density(core)
            values = set(density_candidates(core.node_count, core.edge_count))
            values = {v for v in values if v <= top}
            values.add(Fraction(int(top) + 1))
            return tuple(sorted(values))
        top = max_density(core, m)
        return tuple(Fraction(k) for k in range(int(top) + 2))
    values = set()
    for child in m.children:
        values.update(candidate_grid(core, child))
    return tuple(sorted(values))


class DensityIndexer:
    """Density index of paths over one congested core; covers are cached per rho0."""

    def __init__(self, g: LoadedGraph, threshold: float, m: MeasureExpr,
                 strict: bool = CONGESTION_STRICT):
        self.g = g
        self.m = m
        self.core = congested_core(g, threshold, strict)
        self.grid = candidate_grid(self.core.core, m) if not self.core.is_empty else (Fraction(0),)
        self._covers: Dict[Fraction, frozenset] = {}

    def cover_at(self, rho0: Fraction) -> frozenset:
        """Cover of C(G) at rho0, in core node indices."""
        if rho0 not in self._covers:
            self._covers[rho0] = dense_cover(self.core.core, self.m, rho0).cover
        return self._covers[rho0]

    def index(self, p: Path) -> DensityIndexResult:
        validate_path(self.g.graph, p)
        touched = self.core.from_original(p.nodes)
        if not touched:
            return DensityIndexResult(value=Fraction(0), grid=self.grid)
        i = _first_true(self.grid, lambda rho: not (self.cover_at(rho) & touched))
        return DensityIndexResult(value=self.grid[i], grid=self.grid)


def validate_path(g: Graph, p: Path):
    if not p.nodes:
        raise InvalidPathError("a path needs at least one node")
    for v in p.nodes:
        if not g.has_node(v):
            raise UnknownNodeError(v)
    if len(set(p.nodes)) != len(p.nodes):
        raise InvalidPathError("path repeats a node")
    for u, v in zip(p.nodes, p.nodes[1:]):
        if not g.has_edge(u, v):
            raise InvalidPathError(f"'{g.labels[u]}' and '{g.labels[v]}' are not adjacent")


def path_from_nodes(g: LoadedGraph, nodes: Sequence[int],
                    weights: WeightPolicy = WeightPolicy.UNIT) -> Path:
    p = Path(nodes=tuple(nodes), weight=0)
    validate_path(g.graph, p)
    if WeightPolicy(weights) is WeightPolicy.LOAD:
        weight = sum(g.load(u, v) for u, v in zip(p.nodes, p.nodes[1:]))
    else:
        weight = p.hops
    return Path(nodes=p.nodes, weight=weight)


def density_index(g: LoadedGraph, threshold: float, m: MeasureExpr, p: Path,
                  strict: bool = CONGESTION_STRICT) -> DensityIndexResult:
    """Smallest rho0 on the candidate grid such that p avoids every subgraph with density >= rho0."""
    return DensityIndexer(g, threshold, m, strict).index(p)


def cap_rho0(g: LoadedGraph, threshold: float, m: MeasureExpr,
             strict: bool = CONGESTION_STRICT) -> Optional[Fraction]:
    """rho* of C(G), or None when the congested core is empty."""
    core = congested_core(g, threshold, strict)
    if core.is_empty:
        return None
    return max_density(core.core, m)


def cap_route(g: LoadedGraph, threshold: float, m: MeasureExpr, s: int, t: int,
              weights: WeightPolicy = WeightPolicy.UNIT,
              scope: RouteScope = RouteScope.FULL,
              strict: bool = CONGESTION_STRICT) -> RouteOutcome:
    """Congestion-avoiding path: avoid every densest subgraph of C(G)."""
    check_endpoints(g.graph, s, t)
    rho_star = cap_rho0(g, threshold, m, strict)
    if rho_star is None:
        return dijkstra(g.graph, edge_weights(g, weights), s, t)
    return route_with_density_index(g, threshold, m, rho_star, s, t, weights, scope, strict)
