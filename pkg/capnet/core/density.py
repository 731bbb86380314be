"""
Graph density measures evaluated on a (sub)graph, and min/max expression
trees over them.

All values are exact: `Fraction` for the ratio measures, integral Fractions
for minimum degree and edge connectivity.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import takewhile
from typing import Iterator, Optional, Tuple, Union

import networkx as nx
from networkx.algorithms.connectivity import local_edge_connectivity as _nx_local_edge_connectivity

from .errors import CliqueSizeError, EmptyGraphError, InvalidDensityError
from .graph import Graph

DEFAULT_MAX_CLIQUE_K = 6

DensityValue = Fraction


class MeasureKind(Enum):
    EDGE_DENSITY = "edge"
    MIN_DEGREE = "mindeg"
    K_CLIQUE = "kclique"
    SQUARED_DEGREE = "sqdeg"
    EDGE_CONNECTIVITY = "conn"


INTEGER_KINDS = frozenset({MeasureKind.MIN_DEGREE, MeasureKind.EDGE_CONNECTIVITY})
LISTABLE_KINDS = frozenset({MeasureKind.MIN_DEGREE, MeasureKind.EDGE_CONNECTIVITY, MeasureKind.EDGE_DENSITY})


@dataclass(frozen=True)
class Leaf:
    kind: MeasureKind
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind is MeasureKind.K_CLIQUE:
            if self.k is None or self.k < 2:
                raise CliqueSizeError(f"k-clique density needs k >= 2, got {self.k}")
        elif self.k is not None:
            raise ValueError(f"measure '{self.kind.value}' takes no parameter")


@dataclass(frozen=True)
class MinOf:
    children: Tuple["MeasureExpr", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("min() needs at least two measures")


@dataclass(frozen=True)
class MaxOf:
    children: Tuple["MeasureExpr", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("max() needs at least two measures")


MeasureExpr = Union[Leaf, MinOf, MaxOf]

EDGE_DENSITY = Leaf(MeasureKind.EDGE_DENSITY)
MIN_DEGREE = Leaf(MeasureKind.MIN_DEGREE)
SQUARED_DEGREE = Leaf(MeasureKind.SQUARED_DEGREE)
EDGE_CONNECTIVITY = Leaf(MeasureKind.EDGE_CONNECTIVITY)


def k_clique(k: int) -> Leaf:
    return Leaf(MeasureKind.K_CLIQUE, k)


def leaves(m: MeasureExpr) -> Iterator[Leaf]:
    if isinstance(m, Leaf):
        yield m
    else:
        for child in m.children:
            yield from leaves(child)


def _require_nodes(s: Graph):
    if s.node_count == 0:
        raise EmptyGraphError("density of the empty subgraph is undefined")


def edge_density(s: Graph) -> DensityValue:
    """|E(S)| / |V(S)|."""
    _require_nodes(s)
    return Fraction(s.edge_count, s.node_count)


def min_degree(s: Graph) -> DensityValue:
    _require_nodes(s)
    return Fraction(min(s.degrees()))


def count_k_cliques(s: Graph, k: int) -> int:
    # enumerate_all_cliques yields cliques in non-decreasing size
    cliques = nx.enumerate_all_cliques(s.to_networkx())
    return sum(1 for c in takewhile(lambda c: len(c) <= k, cliques) if len(c) == k)


def k_clique_density(s: Graph, k: int, max_k: int = DEFAULT_MAX_CLIQUE_K) -> DensityValue:
    """Number of k-cliques in S divided by |V(S)|."""
    _require_nodes(s)
    if k < 2:
        raise CliqueSizeError(f"k-clique density needs k >= 2, got {k}")
    if k > max_k:
        raise CliqueSizeError(f"k = {k} exceeds the configured limit of {max_k}")
    if k == 2:
        return Fraction(s.edge_count, s.node_count)
    return Fraction(count_k_cliques(s, k), s.node_count)


def squared_degree_density(s: Graph) -> DensityValue:
    _require_nodes(s)
    return Fraction(sum(d * d for d in s.degrees()), s.node_count)


def edge_connectivity(s: Graph) -> DensityValue:
    """
    Global minimum edge cut (Stoer-Wagner).

    A single node and any disconnected graph have connectivity 0.
    """
    _require_nodes(s)
    delta = min(s.degrees())
    if delta == 0 or not s.is_connected():
        return Fraction(0)
    if delta == 1:
        # connected, and lambda <= min degree
        return Fraction(1)
    cut_value, _ = nx.stoer_wagner(s.to_networkx())
    return Fraction(cut_value)


def local_edge_connectivity(s: Graph, u: int, v: int) -> int:
    """Maximum number of edge-disjoint u-v paths (max-flow)."""
    if u == v:
        raise ValueError("local edge connectivity needs two distinct nodes")
    return _nx_local_edge_connectivity(s.to_networkx(), u, v)


def eval_measure(m: MeasureExpr, s: Graph, max_clique_k: int = DEFAULT_MAX_CLIQUE_K) -> DensityValue:
    if isinstance(m, MinOf):
        return min(eval_measure(c, s, max_clique_k) for c in m.children)
    if isinstance(m, MaxOf):
        return max(eval_measure(c, s, max_clique_k) for c in m.children)
    if m.kind is MeasureKind.EDGE_DENSITY:
        return edge_density(s)
    if m.kind is MeasureKind.MIN_DEGREE:
        return min_degree(s)
    if m.kind is MeasureKind.K_CLIQUE:
        return k_clique_density(s, m.k, max_clique_k)
    if m.kind is MeasureKind.SQUARED_DEGREE:
        return squared_degree_density(s)
    return edge_connectivity(s)


def parse_density(value) -> DensityValue:
    """Exact density from user input: 2, 2.5, "3/2" or "0.75"."""
    try:
        result = Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidDensityError(f"not a density value: {value!r}") from None
    if result < 0:
        raise InvalidDensityError(f"density must be >= 0, got {value!r}")
    return result
