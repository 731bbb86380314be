"""
Density measures, expression trees and the measure mini-language.
"""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from capnet.core.density import (
    EDGE_CONNECTIVITY, EDGE_DENSITY, MIN_DEGREE, SQUARED_DEGREE, MaxOf, MinOf, count_k_cliques,
    edge_connectivity, edge_density, eval_measure, k_clique, k_clique_density, local_edge_connectivity,
    min_degree, parse_density, squared_degree_density,
)
from capnet.core.errors import CliqueSizeError, EmptyGraphError, InvalidDensityError, MeasureSyntaxError
from capnet.core.graph import Graph
from capnet.core.measure_parser import format_measure, parse_measure
from capnet.testing import (
    LEAF_MEASURES, add_edge, complete, cycle, gnp, graphs, measure_trees, path_graph, single_node, star,
    triangle_with_pendant, two_triangles_bridged,
)


def test_exact_spot_values():
    assert edge_connectivity(complete(6)) == 5
    assert edge_density(complete(4)) == Fraction(3, 2)
    assert squared_degree_density(complete(3)) == 4
    assert k_clique_density(complete(4), 3) == 1
    assert all(isinstance(v, Fraction) for v in (
        edge_connectivity(complete(6)), edge_density(complete(4)), squared_degree_density(complete(3)),
    ))


def test_edge_density():
    assert edge_density(complete(3)) == 1
    assert edge_density(single_node()) == 0
    assert Fraction(sum(complete(4).degrees()), 4) == 2 * edge_density(complete(4))


def test_min_degree():
    assert min_degree(complete(4)) == 3
    assert min_degree(path_graph(4)) == 1
    assert min_degree(triangle_with_pendant()) == 1


def test_k_clique_density():
    assert k_clique_density(cycle(5), 3) == 0
    assert k_clique_density(complete(5), 4) == 1
    assert k_clique_density(complete(4), 2) == edge_density(complete(4))
    assert count_k_cliques(complete(5), 3) == 10
    with pytest.raises(CliqueSizeError):
        k_clique_density(complete(4), 1)
    with pytest.raises(CliqueSizeError):
        k_clique_density(complete(4), 7)


def test_squared_degree_density():
    assert squared_degree_density(star(3)) == 3
    assert squared_degree_density(single_node()) == 0


def test_edge_connectivity():
    assert edge_connectivity(cycle(5)) == 2
    assert edge_connectivity(two_triangles_bridged()) == 1
    assert edge_connectivity(single_node()) == 0
    assert edge_connectivity(Graph.from_edges(["a", "b", "c"], [(0, 1)])) == 0
    assert edge_connectivity(path_graph(2)) == 1


def test_empty_subgraph_is_undefined():
    empty = Graph.empty()
    for measure in LEAF_MEASURES:
        with pytest.raises(EmptyGraphError):
            eval_measure(measure, empty)


def test_combinators():
    assert eval_measure(MaxOf((EDGE_DENSITY, MIN_DEGREE)), complete(4)) == 3
    assert eval_measure(MinOf((EDGE_DENSITY, MIN_DEGREE)), triangle_with_pendant()) == 1
    assert eval_measure(MinOf((EDGE_CONNECTIVITY, SQUARED_DEGREE)), complete(3)) == 2


def test_lambda_matches_menger_on_random_graphs():
    rng = np.random.default_rng(11)
    for _ in range(40):
        g = gnp(7, 0.5, rng)
        if not g.is_connected():
            continue
        pairwise = min(local_edge_connectivity(g, 0, v) for v in range(1, g.node_count))
        assert edge_connectivity(g) == pairwise


def test_parse_measure_and_canonical_form():
    m = parse_measure(" min( max(edge, mindeg), max(kclique:3, sqdeg) ) ")
    assert m == MinOf((MaxOf((EDGE_DENSITY, MIN_DEGREE)), MaxOf((k_clique(3), SQUARED_DEGREE))))
    assert format_measure(m) == "min(max(edge,mindeg),max(kclique:3,sqdeg))"
    assert parse_measure("CONN") == EDGE_CONNECTIVITY


@pytest.mark.parametrize("text", ["", "mindeg,", "min(mindeg)", "kclique", "kclique:1", "edge:2", "degree",
                                  "max(edge mindeg)", "min(edge,mindeg", "mindeg$"])
def test_parse_measure_rejects(text):
    with pytest.raises(MeasureSyntaxError):
        parse_measure(text)


def test_parse_density():
    assert parse_density("3/2") == Fraction(3, 2)
    assert parse_density(2) == 2
    assert parse_density("0.75") == Fraction(3, 4)
    assert parse_density(2.5) == Fraction(5, 2)
    for bad in ("-1", "half", "1/0"):
        with pytest.raises(InvalidDensityError):
            parse_density(bad)


@given(graphs(min_nodes=2, max_nodes=7), measure_trees(), st.data())
@settings(max_examples=100, deadline=None)
def test_measures_are_non_negative_and_edge_monotone(g, m, data):
    missing = [(u, v) for u in g.nodes() for v in g.nodes() if u < v and not g.has_edge(u, v)]
    before = eval_measure(m, g)
    assert before >= 0
    if missing:
        u, v = data.draw(st.sampled_from(missing))
        assert eval_measure(m, add_edge(g, u, v)) >= before


@given(graphs(min_nodes=2, max_nodes=8))
@settings(max_examples=100, deadline=None)
def test_edge_connectivity_never_exceeds_min_degree(g):
    assert edge_connectivity(g) <= min_degree(g)
    if not g.is_connected():
        assert edge_connectivity(g) == 0


@given(graphs(min_nodes=1, max_nodes=8))
@settings(max_examples=50, deadline=None)
def test_edge_density_is_half_the_average_degree(g):
    assert edge_density(g) == Fraction(sum(g.degrees()), g.node_count) / 2
    if g.node_count >= 2:
        assert k_clique_density(g, 2) == edge_density(g)
