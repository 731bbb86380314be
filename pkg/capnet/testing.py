"""
Graph builders, named instances and hypothesis strategies shared by the test modules.
"""
import re
from itertools import combinations
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np
from hypothesis import strategies as st

from capnet.core.density import EDGE_CONNECTIVITY, EDGE_DENSITY, MIN_DEGREE, SQUARED_DEGREE, MaxOf, MinOf, k_clique
from capnet.core.graph import Graph, LoadedGraph
from capnet.core.graph_io import parse_edge_list
from capnet.sim.scenario import node_labels

TESTDATA = Path(__file__).parent / "testdata"

# Two congested K4 blocks joined by a congested bridge a1-b1, plus a cool
# three-hop detour s-d1-d2-t. Node indices follow first appearance:
# a1..a4 = 0..3, b1..b4 = 4..7, s = 8, t = 9, d1 = 10, d2 = 11.
BARBELL_ROUTING = TESTDATA / "barbell_routing.edges"

# Congested triangle x-y-z with a congested pendant w on x; s-w-t is cool.
TRIANGLE_PENDANT = TESTDATA / "triangle_pendant.edges"

# One congested link u-v on the short way round; s-x-y-t stays cool.
SINGLE_HOT_LINK = TESTDATA / "single_hot_link.edges"


def load_testdata(path: Path) -> LoadedGraph:
    return parse_edge_list(path.read_text(encoding="utf-8"))


def graph(pairs: Iterable[Tuple[str, str]]) -> Graph:
    """Graph from labelled pairs; labels are numbered in order of appearance."""
    labels: List[str] = []
    index = {}
    edges = []
    for u, v in pairs:
        for label in (u, v):
            if label not in index:
                index[label] = len(labels)
                labels.append(label)
        edges.append((index[u], index[v]))
    return Graph.from_edges(labels, edges)


def loaded(triples: Sequence[Tuple[str, str, float]]) -> LoadedGraph:
    text = "\n".join(f"{u} {v} {load}" for u, v, load in triples)
    return parse_edge_list(text)


def complete(n: int) -> Graph:
    return Graph.from_edges(node_labels(n), combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return Graph.from_edges(node_labels(n), [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(node_labels(n), [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(node_labels(leaves + 1), [(0, i) for i in range(1, leaves + 1)])


def single_node() -> Graph:
    return Graph.from_edges(["v"], [])


def triangle_with_pendant() -> Graph:
    return graph([("x", "y"), ("y", "z"), ("x", "z"), ("x", "w")])


def two_triangles_bridged() -> Graph:
    return graph([("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("d", "f")])


def k4_with_pendant() -> Graph:
    return graph([("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d"), ("d", "p")])


def gnp(n: int, p: float, rng: np.random.Generator) -> Graph:
    """G(n, p) drawn with a numpy generator, labels n0.. in index order."""
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(node_labels(n), edges)


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    return Graph.from_edges(node_labels(n), edges)


def with_loads(g: Graph, rng: np.random.Generator, hot: float = 0.9, cool: float = 0.1,
               hot_fraction: float = 0.5) -> LoadedGraph:
    loads = tuple(hot if rng.random() < hot_fraction else cool for _ in g.edges)
    return LoadedGraph(graph=g, loads=loads)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return Graph.from_edges(g.labels, list(g.edges) + [(u, v)])


# --- hypothesis strategies ---

@st.composite
def graphs(draw, min_nodes: int = 1, max_nodes: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(node_labels(n), [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def loaded_graphs(draw, min_nodes: int = 2, max_nodes: int = 8) -> LoadedGraph:
    g = draw(graphs(min_nodes=min_nodes, max_nodes=max_nodes))
    loads = draw(st.lists(st.sampled_from([0.1, 0.5, 0.9]), min_size=g.edge_count, max_size=g.edge_count))
    return LoadedGraph(graph=g, loads=tuple(loads))


LEAF_MEASURES = (EDGE_DENSITY, MIN_DEGREE, k_clique(3), SQUARED_DEGREE, EDGE_CONNECTIVITY)
LISTABLE_LEAVES = (EDGE_DENSITY, MIN_DEGREE, EDGE_CONNECTIVITY)


def measure_trees(leaves=LEAF_MEASURES, max_depth: int = 3):
    """Min/Max expression trees of depth <= max_depth over the given leaves."""
    leaf = st.sampled_from(leaves)
    trees = leaf
    for _ in range(max_depth - 1):
        trees = st.one_of(leaf, st.builds(
            lambda op, kids: op(tuple(kids)),
            st.sampled_from([MinOf, MaxOf]),
            st.lists(trees, min_size=2, max_size=3),
        ))
    return trees


def depth(m) -> int:
    children = getattr(m, "children", None)
    if not children:
        return 1
    return 1 + max(depth(c) for c in children)


# --- DOT inspection ---

_DOT_STATEMENT = re.compile(r"^\t(\S+)(?: -- (\S+))?(?: \[(.*)\])?$")
_DOT_ATTRIBUTE = re.compile(r'(\w+)=("(?:[^"\\]|\\.)*"|[^\s\]]+)')


def _unquote(token: str) -> str:
    if token.startswith('"'):
        return token[1:-1].replace('\\"', '"')
    return token


def dot_statements(text: str) -> Tuple[str, Dict[str, Dict[str, str]], Dict[Tuple[str, str], Dict[str, str]]]:
    """Header line, node attributes by label and edge attributes by label pair of DOT text."""
    lines = text.splitlines()
    assert lines[-1] == "}"
    labels: Dict[str, str] = {}
    nodes: Dict[str, Dict[str, str]] = {}
    edges: Dict[Tuple[str, str], Dict[str, str]] = {}
    for line in lines[1:-1]:
        match = _DOT_STATEMENT.match(line)
        assert match, line
        head, tail, attrs = match.groups()
        attrs = {key: _unquote(value) for key, value in _DOT_ATTRIBUTE.findall(attrs or "")}
        if tail is None:
            labels[head] = attrs.pop("label")
            nodes[labels[head]] = attrs
        else:
            edges[(labels[head], labels[tail])] = attrs
    return lines[0], nodes, edges
