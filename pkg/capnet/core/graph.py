"""
Network model: undirected simple graphs, per-link relative loads and the
congested core filter.

Nodes are dense integer indices internally; the string label is the stable
identity used across G, C(G) and every subgraph taken from them.
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, Sequence, Tuple

import networkx as nx

from .errors import DuplicateEdgeError, GraphParseError, NegativeLoadError, SelfLoopError, UnknownNodeError

# Links are congested when load > threshold. Flip to False for load >= threshold.
CONGESTION_STRICT = True

SubgraphRef = FrozenSet[int]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph over nodes 0..n-1 with string labels."""
    labels: Tuple[str, ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    edges: Tuple[Tuple[int, int], ...]
    _index: Dict[str, int] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(self.labels)})
        if len(self._index) != len(self.labels):
            raise GraphParseError("node labels must be unique")

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from labels and index pairs, rejecting loops and duplicates."""
        labels = tuple(labels)
        n = len(labels)
        seen = set()
        for u, v in edges:
            if not (0 <= u < n):
                raise UnknownNodeError(u)
            if not (0 <= v < n):
                raise UnknownNodeError(v)
            if u == v:
                raise SelfLoopError(f"self-loop on '{labels[u]}'")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge '{labels[key[0]]}'-'{labels[key[1]]}'")
            seen.add(key)

        neighbours = [[] for _ in range(n)]
        for u, v in seen:
            neighbours[u].append(v)
            neighbours[v].append(u)
        return cls(
            labels=labels,
            adjacency=tuple(tuple(sorted(nb)) for nb in neighbours),
            edges=tuple(sorted(seen)),
        )

    @classmethod
    def empty(cls) -> "Graph":
        return cls(labels=(), adjacency=(), edges=())

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def nodes(self) -> range:
        return range(len(self.labels))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(nb) for nb in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def has_node(self, v: int) -> bool:
        return 0 <= v < len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownNodeError(label) from None

    def contains_label(self, label: str) -> bool:
        return label in self._index

    def labels_of(self, nodes: Iterable[int]) -> list:
        """Labels of `nodes`, sorted by label."""
        return sorted(self.labels[v] for v in nodes)

    def is_connected(self) -> bool:
        if self.node_count == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.node_count

    def to_networkx(self) -> nx.Graph:
        """networkx view with the same integer node ids."""
        G = nx.Graph()
        G.add_nodes_from(self.nodes())
        G.add_edges_from(self.edges)
        return G


@dataclass(frozen=True)
class LoadedGraph:
    """A graph plus per-edge relative load, aligned with `graph.edges`."""
    graph: Graph
    loads: Tuple[float, ...]
    _by_edge: Dict[Tuple[int, int], float] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.loads) != self.graph.edge_count:
            raise GraphParseError("every edge needs exactly one load")
        for (u, v), load in zip(self.graph.edges, self.loads):
            if load < 0:
                raise NegativeLoadError(
                    f"negative load {load} on '{self.graph.labels[u]}'-'{self.graph.labels[v]}'"
                )
        object.__setattr__(self, "_by_edge", dict(zip(self.graph.edges, self.loads)))

    @classmethod
    def from_labelled_edges(cls, labels: Sequence[str],
                            edges: Sequence[Tuple[int, int, float]]) -> "LoadedGraph":
        graph = Graph.from_edges(labels, [(u, v) for u, v, _ in edges])
        by_edge = {(min(u, v), max(u, v)): float(load) for u, v, load in edges}
        return cls(graph=graph, loads=tuple(by_edge[e] for e in graph.edges))

    def load(self, u: int, v: int) -> float:
        return self._by_edge[(min(u, v), max(u, v))]

    def edge_loads(self) -> Iterator[Tuple[Tuple[int, int], float]]:
        return zip(self.graph.edges, self.loads)

    def induced(self, nodes: Iterable[int]) -> "LoadedGraph":
        """Induced loaded subgraph; node identity is carried by label."""
        nodes = frozenset(nodes)
        sub = induced_subgraph(self.graph, nodes)
        keep = sorted(nodes)
        loads = tuple(self.load(keep[u], keep[v]) for u, v in sub.edges)
        return LoadedGraph(graph=sub, loads=loads)


@dataclass(frozen=True)
class CongestedCore:
    """C(G): congested edges only, with the map back to G's node indices."""
    core: Graph
    loads: Tuple[float, ...]
    threshold: float
    origin: Tuple[int, ...]
    strict: bool = CONGESTION_STRICT

    def to_original(self, nodes: Iterable[int]) -> SubgraphRef:
        return frozenset(self.origin[v] for v in nodes)

    def from_original(self, nodes: Iterable[int]) -> SubgraphRef:
        """Core indices of the original `nodes`; nodes outside the core are dropped."""
        position = {o: i for i, o in enumerate(self.origin)}
        return frozenset(position[v] for v in nodes if v in position)

    @property
    def is_empty(self) -> bool:
        return self.core.node_count == 0

    def as_loaded(self) -> LoadedGraph:
        return LoadedGraph(graph=self.core, loads=self.loads)


def is_congested(load: float, threshold: float, strict: bool = CONGESTION_STRICT) -> bool:
    return load > threshold if strict else load >= threshold


def congested_core(g: LoadedGraph, threshold: float, strict: bool = CONGESTION_STRICT) -> CongestedCore:
    """Keep only congested links and the nodes they touch."""
    if threshold < 0:
        raise ValueError(f"threshold must be >= 0, got {threshold}")
    kept = [(e, load) for e, load in g.edge_loads() if is_congested(load, threshold, strict)]
    origin = sorted({v for (u, w), _ in kept for v in (u, w)})
    position = {o: i for i, o in enumerate(origin)}
    core = Graph.from_edges(
        [g.graph.labels[o] for o in origin],
        [(position[u], position[w]) for (u, w), _ in kept],
    )
    load_of = {(position[u], position[w]): load for (u, w), load in kept}
    return CongestedCore(
        core=core,
        loads=tuple(load_of[e] for e in core.edges),
        threshold=threshold,
        origin=tuple(origin),
        strict=strict,
    )


def induced_subgraph(g: Graph, nodes: SubgraphRef) -> Graph:
    """The subgraph on `nodes` with every edge of g between them."""
    for v in nodes:
        if not g.has_node(v):
            raise UnknownNodeError(v)
    keep = sorted(nodes)
    position = {o: i for i, o in enumerate(keep)}
    edges = [(position[u], position[v]) for u, v in g.edges if u in position and v in position]
    return Graph.from_edges([g.labels[o] for o in keep], edges)


def remove_nodes(g: Graph, nodes: Iterable[int]) -> Graph:
    """g without `nodes`; indices not in g are ignored."""
    drop = set(nodes)
    return induced_subgraph(g, frozenset(v for v in g.nodes() if v not in drop))


def lift(sub: Graph, host: Graph, nodes: Iterable[int]) -> SubgraphRef:
    """Map node indices of a subgraph of `host` back to host indices by label."""
    return frozenset(host.index_of(sub.labels[v]) for v in nodes)
