import pytest

from cubiclines.fields import GF
from cubiclines.graphs import (IntersectionGraph, bowtie_graph,
                               complete_graph, empty_graph,
                               expected_permissible, friendship_graph,
                               graph_isomorphic, intersection_graph,
                               is_permissible, path_graph,
                               permissible_catalog, triangle_plus_isolated,
                               two_triangles,
                               verify_shared_triangle_forcing_order7)
from cubiclines.surface import parse_surface, rational_lines


def test_permissibility_of_named_graphs():
    assert is_permissible(complete_graph(3))
    assert is_permissible(bowtie_graph())
    assert is_permissible(triangle_plus_isolated())
    assert is_permissible(two_triangles())
    assert is_permissible(empty_graph(1))
    assert is_permissible(empty_graph(2))
    assert not is_permissible(complete_graph(4))       # shared triangle edges
    assert not is_permissible(empty_graph(3))          # disjoint triple
    assert not is_permissible(path_graph(3))           # edge not in triangle
    assert not is_permissible(friendship_graph())      # disjoint triple


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_catalog_is_unique_per_order(n):
    cat = permissible_catalog(n)
    assert len(cat) == 1
    assert graph_isomorphic(cat[0], expected_permissible(n)) is not None


def test_catalog_empty_at_order_7():
    assert permissible_catalog(7) == []


def test_order7_shared_triangle_forcing():
    count, ok = verify_shared_triangle_forcing_order7()
    assert ok
    assert count > 0


def test_intersection_graph_fermat_f4():
    F = GF(2, 2)
    f = parse_surface(F, "x0^3 + x0^2*x1 + x1^3 + x0^2*x2 + x2^3 + x3^3")
    ls = rational_lines(f)
    g = intersection_graph(ls.lines())
    assert graph_isomorphic(g, complete_graph(3)) is not None


def test_intersection_graph_two_skew_lines():
    F = GF(2, 2)
    f = parse_surface(
        F, "x0^3 + a*x0*x1^2 + x1^3 + a*x0*x1*x2 + x2^3 + a*x0^2*x3"
        " + a*x0*x1*x3 + x3^3")
    g = intersection_graph(rational_lines(f).lines())
    assert g.order() == 2 and g.edge_count() == 0


def test_seven_line_graph_is_friendship():
    F = GF(2, 2)
    f = parse_surface(F, "x0^2*x1 + x0*x1^2 + x0^2*x2 + x2^3 + x0^2*x3 + x3^3")
    g = intersection_graph(rational_lines(f).lines())
    assert graph_isomorphic(g, friendship_graph()) is not None


def test_isomorphism_examples(rng):
    assert graph_isomorphic(complete_graph(3), path_graph(3)) is None
    g = bowtie_graph()
    perm = list(range(5))
    rng.shuffle(perm)
    h = g.relabel(perm)
    iso = graph_isomorphic(g, h)
    assert iso is not None
    for i in range(5):
        for j in range(5):
            assert g.has_edge(i, j) == h.has_edge(iso[i], iso[j])


def test_isomorphism_respects_structure_not_labels():
    g1 = IntersectionGraph.from_edges("abc", [("a", "b"), ("b", "c"),
                                              ("a", "c")])
    g2 = complete_graph(3)
    assert graph_isomorphic(g1, g2) is not None


def test_json_and_dot_exports():
    g = bowtie_graph()
    doc = g.to_json_dict()
    assert doc["order"] == 5
    assert [2, 3] in doc["edges"] or [2, 4] in doc["edges"]
    dot = g.to_dot()
    assert dot.startswith("graph") and "--" in dot
