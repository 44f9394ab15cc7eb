import itertools

import pytest

from cubiclines.fields import GF
from cubiclines.graphs import graph_isomorphic
from cubiclines.surface import all_27_lines, frobenius_permutation, parse_surface
from cubiclines.weyl import (LABEL_INDEX, LABELS, all_double_sixes,
                             automorphism_group, double_six_of,
                             fixed_labels_of_index_perm, fixed_set_mask,
                             incidence_model, index_permutation,
                             is_model_automorphism,
                             model_permutation_from_lines,
                             possible_fixed_counts, restricted_model,
                             steiner_complete, transversals_of_four_skew)


def test_model_is_ten_regular_with_45_triangles():
    g = incidence_model()
    assert g.order() == 27
    assert set(g.degrees()) == {10}
    assert len(g.triangles()) == 45
    # no two triangles share an edge
    seen = set()
    for a, b, c in g.triangles():
        for e in ((a, b), (a, c), (b, c)):
            assert e not in seen
            seen.add(e)


def test_model_incidence_rules():
    g = incidence_model()
    E1, E2, E3 = (LABEL_INDEX[k] for k in ("E1", "E2", "E3"))
    C6, L16 = LABEL_INDEX["C6"], LABEL_INDEX["L16"]
    assert g.has_edge(E1, C6) and g.has_edge(E1, L16) and g.has_edge(C6, L16)
    assert not g.has_edge(E1, E2) and not g.has_edge(E2, E3)
    assert not g.has_edge(LABEL_INDEX["C1"], LABEL_INDEX["C2"])
    assert not g.has_edge(E1, LABEL_INDEX["C1"])
    # L-L: disjoint index pairs meet
    assert g.has_edge(LABEL_INDEX["L12"], LABEL_INDEX["L34"])
    assert not g.has_edge(LABEL_INDEX["L12"], LABEL_INDEX["L13"])


def test_every_index_permutation_is_an_automorphism(rng):
    for _ in range(20):
        sigma = list(range(1, 7))
        rng.shuffle(sigma)
        assert is_model_automorphism(index_permutation(sigma))


def test_group_order_and_fixed_counts():
    gens, elements = automorphism_group()
    assert len(elements) == 51840
    assert possible_fixed_counts() == [0, 1, 2, 3, 5, 7, 9, 15, 27]
    for bad in (4, 6, 10, 11, 12, 13, 14):
        assert bad not in possible_fixed_counts()


def test_group_elements_preserve_adjacency(rng):
    _, elements = automorphism_group()
    for p in rng.sample(elements, 40):
        assert is_model_automorphism(p)
    # closure under composition, sampled
    for _ in range(20):
        p, q = rng.choice(elements), rng.choice(elements)
        comp = tuple(p[q[i]] for i in range(27))
        assert comp in set(elements)


def test_identity_fixes_27():
    _, elements = automorphism_group()
    ident = tuple(range(27))
    assert ident in set(elements)
    assert bin(fixed_set_mask(ident)).count("1") == 27


def test_stabilizer_of_e_sextuple_is_s6():
    _, elements = automorphism_group()
    esix = set(range(6))
    stab = [p for p in elements if {p[i] for i in range(6)} == esix]
    assert len(stab) == 720


def test_vertex_transitivity():
    _, elements = automorphism_group()
    assert {p[0] for p in elements} == set(range(27))


def test_transversals_of_four_skew():
    assert transversals_of_four_skew(["E1", "E2", "E3", "E6"]) == ["C4", "C5"]
    with pytest.raises(ValueError):
        transversals_of_four_skew(["E1", "C2", "E3", "E6"])


def test_double_six_count_and_query():
    assert len(all_double_sixes()) == 36
    ds = double_six_of(("C4", "C5"))
    assert len(ds) == 12 and "C4" in ds and "C5" in ds
    # the classical double six: E's against C's
    ds2 = double_six_of(("E1", "C1"))
    assert set(ds2) == {f"E{i}" for i in range(1, 7)} | \
        {f"C{i}" for i in range(1, 7)}


def test_steiner_completion_grid():
    grid = steiner_complete(("E1", "C6", "L16"), ("E2", "C5", "L25"))
    g = incidence_model()
    rows = [list(r) for r in grid]
    cols = [list(c) for c in zip(*grid)]
    for triple in rows + cols:
        idx = [LABEL_INDEX[l] for l in triple]
        assert all(g.has_edge(a, b)
                   for a, b in itertools.combinations(idx, 2))
    assert len({l for row in grid for l in row}) == 9


def test_fixed_labels_examples():
    # three conjugate pairs fix exactly the three L's of the pairs
    labs = fixed_labels_of_index_perm([2, 1, 4, 3, 6, 5])
    assert set(labs) == {"L12", "L34", "L56"}
    sub = restricted_model(labs)
    assert sub.edge_count() == 3        # pairwise meeting
    # one point + a 3-orbit + a pair: three skew lines
    labs = fixed_labels_of_index_perm([1, 3, 4, 2, 6, 5])
    assert set(labs) == {"E1", "C1", "L56"}
    assert restricted_model(labs).edge_count() == 0


def test_transported_frobenius_lies_in_group():
    F = GF(2, 2)
    f = parse_surface(F, "x0^3 + x1^3 + a*x2^3 + a*x3^3")
    full = all_27_lines(f)
    perm = frobenius_permutation(full.lines(), F)
    model_perm = model_permutation_from_lines(full.lines(), perm)
    _, elements = automorphism_group()
    assert model_perm in set(elements)
    fixed = sum(1 for i in range(27) if model_perm[i] == i)
    assert fixed == len(full.rational_sublist())
