"""
Maximal dense subgraphs: core decomposition, maximal k-edge-connected
subgraphs, exact densest subgraph, and the dense cover used for avoidance.
"""
import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from .density import (
    DensityValue, LISTABLE_KINDS, Leaf, MaxOf, MeasureExpr, MeasureKind, MinOf, leaves,
)
from .errors import EdgelessGraphError, EmptyGraphError, UnsupportedMeasureError
from .graph import Graph, SubgraphRef, induced_subgraph, lift


class Exactness(str, Enum):
    EXACT = "exact"
    OVER_APPROXIMATE = "over_approximate"


@dataclass(frozen=True)
class CoreDecomposition:
    core_numbers: Tuple[int, ...]

    def k_core(self, k: int) -> SubgraphRef:
        return frozenset(v for v, c in enumerate(self.core_numbers) if c >= k)

    @property
    def degeneracy(self) -> int:
        return max(self.core_numbers, default=0)

    def by_label(self, g: Graph) -> dict:
        return {g.labels[v]: c for v, c in enumerate(self.core_numbers)}


@dataclass(frozen=True)
class DenseCover:
    """Maximal subgraphs with density >= rho0, and the union of their nodes."""
    components: Tuple[SubgraphRef, ...]
    cover: SubgraphRef
    exactness: Exactness
    measure: MeasureExpr
    rho0: DensityValue

    @property
    def exact(self) -> bool:
        return self.exactness is Exactness.EXACT


def core_decomposition(g: Graph) -> CoreDecomposition:
    """Core number of every node by minimum-degree peeling."""
    numbers = nx.core_number(g.to_networkx())
    return CoreDecomposition(tuple(numbers[v] for v in g.nodes()))


def k_core(g: Graph, k: int) -> SubgraphRef:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return core_decomposition(g).k_core(k)


def core_shells(g: Graph) -> List[SubgraphRef]:
    """The nested k-cores for k = 0 .. degeneracy."""
    decomposition = core_decomposition(g)
    return [decomposition.k_core(k) for k in range(decomposition.degeneracy + 1)]


def degeneracy(g: Graph) -> int:
    if g.node_count == 0:
        raise EmptyGraphError("degeneracy of the empty graph is undefined")
    return core_decomposition(g).degeneracy


def _by_smallest(sets) -> List[SubgraphRef]:
    return sorted(sets, key=lambda s: (min(s), len(s)))


def maximal_k_edge_connected(g: Graph, k: int) -> List[SubgraphRef]:
    """
    All maximal node sets whose induced subgraph is k-edge-connected.

    Splits along global minimum cuts until every piece either reaches
    connectivity k or falls apart. Results are node-disjoint; single nodes are
    never reported.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    G = g.to_networkx()
    pending = [frozenset(c) for c in nx.connected_components(G)]
    found = []
    while pending:
        nodes = pending.pop()
        if len(nodes) < 2:
            continue
        cut_value, (side_a, side_b) = nx.stoer_wagner(G.subgraph(nodes))
        if cut_value >= k:
            found.append(nodes)
            continue
        for side in (side_a, side_b):
            pending.extend(frozenset(c) for c in nx.connected_components(G.subgraph(side)))
    return _by_smallest(found)


def density_candidates(node_count: int, edge_count: int) -> List[Fraction]:
    """Every value |E(S)|/|V(S)| can take: {a/b : 0 <= a <= |E|, 1 <= b <= |V|}."""
    return sorted({Fraction(a, b) for b in range(1, node_count + 1) for a in range(edge_count + 1)})


def _edges_within(g: Graph, nodes: SubgraphRef) -> int:
    return sum(1 for u, v in g.edges if u in nodes and v in nodes)


def max_surplus_subgraph(g: Graph, rho: Fraction, pinned: Optional[int] = None) -> Tuple[Fraction, SubgraphRef]:
    """
    Largest S maximizing |E(S)| - rho*|V(S)|, optionally forced to contain `pinned`.

    Min cut over the densest-subgraph flow network with capacities scaled to
    integers by rho's denominator; the maximal source side of the cut is the
    union of all maximizers.
    """
    rho = Fraction(rho)
    p, q = rho.numerator, rho.denominator
    n, m = g.node_count, g.edge_count
    source, sink = n, n + 1
    big = max(m, 1) * q

    D = nx.DiGraph()
    D.add_nodes_from(range(n + 2))
    for v in g.nodes():
        if v == pinned:
            D.add_edge(source, v)  # no capacity attribute: unbounded
        else:
            D.add_edge(source, v, capacity=big)
        D.add_edge(v, sink, capacity=big + 2 * p - g.degree(v) * q)
    for u, v in g.edges:
        D.add_edge(u, v, capacity=q)
        D.add_edge(v, u, capacity=q)

    R = edmonds_karp(D, source, sink)
    reaches_sink = {sink}
    queue = deque([sink])
    while queue:
        x = queue.popleft()
        for u in R.pred[x]:
            if u not in reaches_sink and R[u][x]["flow"] < R[u][x]["capacity"]:
                reaches_sink.add(u)
                queue.append(u)
    chosen = frozenset(v for v in g.nodes() if v not in reaches_sink)
    return Fraction(_edges_within(g, chosen)) - rho * len(chosen), chosen


def densest_edge_density_subgraph(g: Graph) -> SubgraphRef:
    """The unique maximal node set of maximum edge density."""
    if g.node_count == 0:
        raise EmptyGraphError("densest subgraph of the empty graph is undefined")
    if g.edge_count == 0:
        raise EdgelessGraphError("edgeless graph: every subgraph has density 0")
    candidates = density_candidates(g.node_count, g.edge_count)
    # largest candidate whose maximal maximizer is non-empty
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        _, chosen = max_surplus_subgraph(g, candidates[mid])
        if chosen:
            lo = mid
        else:
            hi = mid - 1
    _, chosen = max_surplus_subgraph(g, candidates[lo])
    return chosen


def max_edge_density(g: Graph) -> Fraction:
    if g.edge_count == 0:
        return Fraction(0)
    densest = densest_edge_density_subgraph(g)
    return Fraction(_edges_within(g, densest), len(densest))


def _edge_density_components(g: Graph, rho0: Fraction) -> List[SubgraphRef]:
    """
    Every node lying in some S with |E(S)| >= rho0*|V(S)|, grouped by witness.

    The first witness is the unconstrained maximizer; each node still
    uncovered afterwards is pinned in turn and its best witness kept when it
    qualifies.
    """
    components = []
    covered = set()
    surplus, top = max_surplus_subgraph(g, rho0)
    if top and surplus >= 0:
        components.append(top)
        covered |= top
    for v in g.nodes():
        if v in covered:
            continue
        surplus, witness = max_surplus_subgraph(g, rho0, pinned=v)
        if surplus >= 0:
            components.append(witness)
            covered |= witness
    return components


def _leaf_components(g: Graph, leaf: Leaf, rho0: Fraction) -> List[SubgraphRef]:
    if leaf.kind is MeasureKind.MIN_DEGREE:
        core = k_core(g, math.ceil(rho0))
        return [core] if core else []
    if leaf.kind is MeasureKind.EDGE_CONNECTIVITY:
        return maximal_k_edge_connected(g, math.ceil(rho0))
    return _edge_density_components(g, rho0)


def _cover(g: Graph, m: MeasureExpr, rho0: Fraction) -> Tuple[List[SubgraphRef], Exactness]:
    if g.node_count == 0:
        exactness = Exactness.OVER_APPROXIMATE if isinstance(m, MinOf) else Exactness.EXACT
        return [], exactness

    if isinstance(m, Leaf):
        if rho0 <= 0:
            return [frozenset(g.nodes())], Exactness.EXACT
        return _by_smallest(_leaf_components(g, m, rho0)), Exactness.EXACT

    if isinstance(m, MaxOf):
        components = set()
        exact = True
        for child in m.children:
            child_components, child_exactness = _cover(g, child, rho0)
            components.update(child_components)
            exact = exact and child_exactness is Exactness.EXACT
        return _by_smallest(components), (Exactness.EXACT if exact else Exactness.OVER_APPROXIMATE)

    # Min: restrict alternately to each child's cover until nothing changes
    working = frozenset(g.nodes())
    while True:
        previous = working
        for child in m.children:
            if not working:
                break
            sub = induced_subgraph(g, working)
            child_components, _ = _cover(sub, child, rho0)
            working = lift(sub, g, frozenset().union(*child_components))
        if working == previous or not working:
            break
    return ([working] if working else []), Exactness.OVER_APPROXIMATE


def ensure_listable(m: MeasureExpr):
    for leaf in leaves(m):
        if leaf.kind not in LISTABLE_KINDS:
            raise UnsupportedMeasureError(
                f"measure '{leaf.kind.value}' can be evaluated but not listed; "
                "covers support mindeg, conn and edge (and min/max over them)"
            )


def dense_cover(g: Graph, m: MeasureExpr, rho0: DensityValue) -> DenseCover:
    """Node sets of maximal subgraphs of g with density >= rho0 under m."""
    rho0 = Fraction(rho0)
    if rho0 < 0:
        raise ValueError(f"rho0 must be >= 0, got {rho0}")
    ensure_listable(m)
    components, exactness = _cover(g, m, rho0)
    return DenseCover(
        components=tuple(components),
        cover=frozenset().union(*components),
        exactness=exactness,
        measure=m,
        rho0=rho0,
    )
