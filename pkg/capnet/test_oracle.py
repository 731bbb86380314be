"""
Brute-force ground truth: subset enumeration, cover checking, path enumeration and clique numbers.
"""
from fractions import Fraction

import pytest

from capnet.core.dense_subgraphs import DenseCover, Exactness
from capnet.core.density import EDGE_CONNECTIVITY, MIN_DEGREE
from capnet.core.errors import OracleSizeError
from capnet.core.graph import Graph
from capnet.core.oracle import (
    EXTRA_IN_COVER, MISSING_FROM_COVER, brute_force_cap, brute_force_clique_number, check_cover, enumerate_dense,
)
from capnet.core.routing import NoPathReason
from capnet.testing import (
    BARBELL_ROUTING, complete, cycle, k4_with_pendant, load_testdata, triangle_with_pendant,
)


def test_triangle_has_one_qualifying_subgraph():
    report = enumerate_dense(complete(3), MIN_DEGREE, 2)
    assert [q.nodes for q in report.qualifying] == [frozenset({0, 1, 2})]
    assert report.qualifying[0].density == 2
    assert report.exact_cover == frozenset({0, 1, 2})
    assert report.instance == "n=3 m=3 rho0=2"


def test_only_k4_is_three_edge_connected():
    report = enumerate_dense(complete(4), EDGE_CONNECTIVITY, 3)
    assert [q.nodes for q in report.qualifying] == [frozenset(range(4))]


def test_every_subset_qualifies_at_zero():
    report = enumerate_dense(triangle_with_pendant(), MIN_DEGREE, 0)
    assert len(report.qualifying) == 2 ** 4 - 1


def _cover(nodes, m=MIN_DEGREE, rho0=2):
    return DenseCover(components=(frozenset(nodes),), cover=frozenset(nodes),
                      exactness=Exactness.EXACT, measure=m, rho0=Fraction(rho0))


def test_check_cover_reports_both_directions():
    g = triangle_with_pendant()
    exact = check_cover(g, _cover({0, 1, 2}))
    assert exact.discrepancies == ()
    assert exact.sound and exact.gap == 0

    short = check_cover(g, _cover({0, 1}))
    assert short.discrepancies == ((2, MISSING_FROM_COVER),)
    assert not short.sound

    wide = check_cover(g, _cover({0, 1, 2, 3}))
    assert wide.discrepancies == ((3, EXTRA_IN_COVER),)
    assert wide.sound and wide.gap == 1


def test_brute_force_cap_on_the_barbell():
    g = load_testdata(BARBELL_ROUTING)
    s, t, a2 = (g.graph.index_of(label) for label in ("s", "t", "a2"))
    outcome = brute_force_cap(g, 0.7, MIN_DEGREE, 3, s, t)
    assert [g.graph.labels[v] for v in outcome.path.nodes] == ["s", "d1", "d2", "t"]
    assert outcome.path.weight == 3

    plain = brute_force_cap(g, 0.7, MIN_DEGREE, 5, s, t)
    assert [g.graph.labels[v] for v in plain.path.nodes] == ["s", "a1", "b1", "t"]

    assert brute_force_cap(g, 0.7, MIN_DEGREE, 3, a2, t).reason is NoPathReason.ENDPOINT_REMOVED


def test_clique_numbers():
    assert brute_force_clique_number(complete(5)) == 5
    assert brute_force_clique_number(cycle(5)) == 2
    assert brute_force_clique_number(k4_with_pendant()) == 4
    assert brute_force_clique_number(Graph.from_edges(["a", "b"], [])) == 1
    assert brute_force_clique_number(Graph.empty()) == 0


def test_size_limits():
    with pytest.raises(OracleSizeError):
        enumerate_dense(complete(16), MIN_DEGREE, 1)
    with pytest.raises(OracleSizeError):
        enumerate_dense(complete(6), MIN_DEGREE, 1, max_nodes=5)
    with pytest.raises(OracleSizeError):
        brute_force_clique_number(complete(16))
    big = load_testdata(BARBELL_ROUTING)
    with pytest.raises(OracleSizeError):
        brute_force_cap(big, 0.7, MIN_DEGREE, 3, 8, 9, max_nodes=11)
