import json
import math

import pytest

from ringlab.builders import (
    cyclic_ring,
    direct_product,
    first_row_ring,
    full_matrix_ring,
    null_ring,
)
from ringlab.enumeration import opposite_ring, ring_classes
from ringlab.errors import NotLeftIdentity, VertexNotInGraph
from ringlab.rings import element_sets
from ringlab.zdgraph import (
    ZdGraph,
    build_graph,
    claimed_edge_count,
    clique_number,
    degree_report,
    distances,
    endpoint_sets,
    graph_to_dot,
    graph_to_json_dict,
    is_network,
    semigroup_closure_check,
    sinks,
    sources,
    strongly_connected,
    strongly_left_invertible,
    strongly_right_invertible,
    weakly_connected,
)


def test_cyclic_six_graph(z6):
    g = build_graph(z6)
    assert g.vertices == (2, 3, 4)
    assert g.edges() == [(2, 3), (3, 2), (3, 4), (4, 3)]
    assert g.loops == frozenset()
    d = distances(g)
    assert d.d(2, 4) == 2
    assert d.d(2, 2) == 0
    assert d.diameter == 2
    assert strongly_connected(g)
    assert sinks(g) == [] and sources(g) == []
    assert clique_number(g) == 2


def test_row_ring_graph(t2):
    g = build_graph(t2)
    assert g.vertices == (1, 2, 3)
    assert g.edges() == [(1, 2), (1, 3)]
    assert g.loops == frozenset({1})
    assert sinks(g) == [2, 3]
    assert sources(g) == [1]
    d = distances(g)
    assert d.d(2, 1) == math.inf
    assert d.diameter == math.inf
    assert d.max_finite == 1
    assert not strongly_connected(g)
    assert weakly_connected(g)
    assert clique_number(g) == 1
    assert not is_network(g)


def test_null_ring_complete_graph(null22):
    g = build_graph(null22)
    assert len(g.edges()) == 6
    assert g.loops == frozenset({1, 2, 3})
    assert clique_number(g) == 3
    assert distances(g).diameter == 1
    assert strongly_connected(g)


def test_field_empty_graph():
    g = build_graph(cyclic_ring(7))
    assert g.vertices == ()
    assert g.edges() == []
    d = distances(g)
    assert d.diameter == 0
    assert d.max_finite == 0
    assert strongly_connected(g)
    assert clique_number(g) == 0
    assert not is_network(g)


def test_single_vertex_graph():
    g = build_graph(cyclic_ring(4))
    assert g.vertices == (2,)
    assert g.loops == frozenset({2})
    assert sinks(g) == [] and sources(g) == []
    assert strongly_connected(g)
    assert clique_number(g) == 1


def test_degree_report(t2):
    g = build_graph(t2)
    assert degree_report(g, 1) == (2, 0, True)
    assert degree_report(g, 2) == (0, 1, False)
    with pytest.raises(VertexNotInGraph):
        degree_report(g, 0)


def test_loops_never_in_edge_list():
    for ring in ring_classes(4):
        g = build_graph(ring)
        assert all(x != y for x, y in g.edges())


def test_from_edges_network_shape():
    g = ZdGraph.from_edges([0, 1, 2], [(0, 1), (0, 2), (1, 2)])
    assert sources(g) == [0]
    assert sinks(g) == [2]
    assert is_network(g)
    # removing the chord: source no longer reaches the middle vertex
    g2 = ZdGraph.from_edges([0, 1, 2], [(0, 2), (1, 2)])
    assert not is_network(g2)
    with pytest.raises(VertexNotInGraph):
        ZdGraph.from_edges([0, 1], [(0, 5)])


def test_matrix_ring_diameter():
    g = build_graph(full_matrix_ring(2, 2))
    assert len(g.vertices) == 9
    assert distances(g).diameter == 2
    assert strongly_connected(g)


def test_strongly_invertible_sets(t2, u3):
    assert strongly_right_invertible(t2) == {2, 3}
    assert strongly_left_invertible(t2) == frozenset()
    op = opposite_ring(t2)
    assert strongly_right_invertible(op) == frozenset()
    assert strongly_left_invertible(op) == {2, 3}
    # unital rings have no strongly invertible elements by definition
    assert strongly_right_invertible(cyclic_ring(6)) == frozenset()
    assert strongly_right_invertible(u3) == {3, 4, 5, 6, 7, 8}


def test_endpoint_sets_agree_with_algebra(u3):
    g = build_graph(u3)
    eps = endpoint_sets(u3, g)
    sets = element_sets(u3)
    assert eps.sinks == sets.right_zero_divisors - sets.left_zero_divisors
    assert eps.sources == frozenset()
    assert eps.inv_r == eps.sinks
    assert eps.middle == {1, 2}


def test_endpoint_partition_union_small_orders():
    # sources + two-sided zero divisors + sinks always cover the vertices
    for order in (2, 3, 4, 5, 6):
        for ring in ring_classes(order):
            g = build_graph(ring)
            sets = element_sets(ring)
            middle = sets.left_zero_divisors & sets.right_zero_divisors
            union = set(sinks(g)) | set(sources(g)) | middle
            assert union == set(g.vertices), ring.label


def test_endpoint_sets_exhaustive_orders_5_to_7():
    # graph endpoints match the one-sided zero-divisor description
    for order in (5, 6, 7):
        for ring in ring_classes(order):
            g = build_graph(ring)
            eps = endpoint_sets(ring, g)  # raises on disagreement
            assert eps.sinks | eps.sources <= set(g.vertices)


def test_semigroup_closure_check(t2, z6):
    ok = semigroup_closure_check([2, 3], t2, "left")
    assert ok.closed and ok.cancellative and ok.witness is None
    # {0, 3} in Z/6 is closed but 0*0 = 0*3 kills left cancellation
    res = semigroup_closure_check([0, 3], z6, "left")
    assert res.closed
    assert not res.cancellative
    assert res.witness == (0, 0, 3)
    bad = semigroup_closure_check([2, 3], z6, "left")
    assert not bad.closed
    assert bad.witness == (2, 2, 4)
    with pytest.raises(ValueError):
        semigroup_closure_check([1], z6, "middle")


def test_claimed_edge_count_row_rings(t2, u3):
    assert claimed_edge_count(t2, 2, "simple")[:2] == (2, 2)
    assert claimed_edge_count(t2, 2, "loop")[:2] == (2, 3)
    assert claimed_edge_count(u3, 3, "simple")[:2] == (6, 14)
    assert claimed_edge_count(u3, 3, "loop")[:2] == (6, 16)
    with pytest.raises(NotLeftIdentity):
        claimed_edge_count(t2, 1, "simple")
    with pytest.raises(ValueError):
        claimed_edge_count(t2, 2, "fancy")


def test_graph_json_shape(z6):
    data = graph_to_json_dict(build_graph(z6))
    assert sorted(data) == ["clique_number", "diameter", "edges", "loops",
                            "max_finite_distance", "sinks", "sources", "vertices"]
    assert data["diameter"] == 2
    blob = json.dumps(data, sort_keys=True)
    assert json.loads(blob) == data


def test_graph_json_infinite_diameter(t2):
    data = graph_to_json_dict(build_graph(t2))
    assert data["diameter"] is None
    assert data["max_finite_distance"] == 1


def test_dot_output(t2):
    dot = graph_to_dot(build_graph(t2))
    assert dot.count("lightcoral") == 2
    assert dot.count("palegreen") == 1
    assert "n1 -> n1;" in dot
    assert dot.endswith("}\n")
    assert "(1,0)" in dot  # element names survive when the ring carries them


def test_clique_numbers_from_structure():
    assert clique_number(build_graph(null_ring([3, 3]))) == 8
    assert clique_number(build_graph(first_row_ring(2, 4))) == 3
    assert clique_number(build_graph(first_row_ring(2, 5))) == 4
    prod = direct_product(cyclic_ring(2), null_ring([2]))
    assert clique_number(build_graph(prod)) == 2


def test_distance_matrix_structure(z6):
    d = distances(build_graph(z6))
    assert d.all_finite()
    assert d.d(3, 2) == 1
    # symmetric ring gives symmetric distances here
    assert d.d(2, 3) == d.d(3, 2)
