import pytest

from turanforest.canon import canonical_form
from turanforest.constructions import (
    disjoint_cliques,
    linear_extremal,
    matching_extremal,
    near_regular,
    order4_extremal,
    extremal_constructions,
    star_extremal,
)
from turanforest.embedding import find_embedding
from turanforest.forest import parse_forest
from turanforest.formulas import RegimeError, eg_matching_number, order4_edge_counts, turan_formula
from turanforest.graph import SmallGraph, add_universal_vertices, disjoint_union_all


@pytest.mark.parametrize("m", range(1, 21))
def test_near_regular_degrees(m):
    for r in range(0, m):
        g = near_regular(m, r)
        degs = sorted(g.degrees())
        if r * m % 2 == 0:
            assert degs == [r] * m
        else:
            assert degs == [r - 1] + [r] * (m - 1)


def test_near_regular_rejects_impossible_degree():
    with pytest.raises(RegimeError):
        near_regular(4, 4)


def test_linear_shape():
    c = linear_extremal(parse_forest("P5+P3"), 10)
    # s = 3: two universal vertices and one remainder edge
    assert c.descriptor.universal_count == 2
    assert c.descriptor.remainder_kind == "single_edge"
    assert c.edge_count == 1 + 2 * 8 + 1
    c = linear_extremal(parse_forest("P4+P2"), 10)
    assert c.descriptor.remainder_kind == "empty"
    assert c.edge_count == 17


def test_star_shape():
    c = star_extremal(parse_forest("S3+S2"), 10, 2)
    assert c.descriptor.family == "StarFni"
    assert c.descriptor.universal_count == 1
    assert c.descriptor.remainder_kind == "matching"
    assert c.edge_count == 13
    c = star_extremal(parse_forest("3*P3"), 12, 3)
    assert c.descriptor.family == "P3Forest"


def test_p4_plus_s3_g1_shape():
    # one universal vertex over three triangles: K1 joined to 3*K3
    c = order4_extremal(1, 1, 10, "G1")
    expected = add_universal_vertices(disjoint_union_all([SmallGraph.complete(3)] * 3), 1)
    assert canonical_form(c.graph) == canonical_form(expected)
    assert c.edge_count == 18


def test_order4_variants_counts():
    for a in range(1, 4):
        for b in range(1, 4):
            for n in range(4 * (a + b), 4 * (a + b) + 12):
                counts = order4_edge_counts(a, b, n)
                for v in ("G1", "G2"):
                    assert order4_extremal(a, b, n, v).edge_count == counts[v]


def test_order4_variants_free():
    for a, b in [(1, 1), (1, 2), (2, 1), (2, 2)]:
        for n in range(4 * (a + b), 4 * (a + b) + 8):
            spec = parse_forest(f"{a}*P4+{b}*S3")
            for v in ("G1", "G2"):
                assert find_embedding(order4_extremal(a, b, n, v).graph, spec) is None


def test_unknown_variant():
    with pytest.raises(ValueError):
        order4_extremal(1, 1, 10, "G3")


@pytest.mark.parametrize(
    "text",
    ["P4+P2", "P6+P2", "P5+P3", "P7+P4", "3*P2", "2*P5", "S3+S2", "S4+S2+P2", "3*P3", "S5", "P4+2*S3", "3*P4+S3"],
)
def test_constructions_free_and_match_formula(text):
    spec = parse_forest(text)
    for n in range(spec.total_vertices, min(spec.total_vertices + 14, 40)):
        value = turan_formula(spec, n).value
        for c in extremal_constructions(spec, n):
            assert c.graph.n == n
            assert c.edge_count == value
            assert find_embedding(c.graph, spec) is None


def test_construction_plus_edge_contains_forest():
    # adding any missing edge creates a copy once n is past the small-n irregularities
    for text, n in [("P4+P2", 10), ("P5+P3", 12), ("S3+S2", 10), ("P4+S3", 12)]:
        spec = parse_forest(text)
        for c in extremal_constructions(spec, n):
            g = c.graph
            for u in range(n):
                for v in range(u + 1, n):
                    if not g.has_edge(u, v):
                        assert find_embedding(g.with_edge(u, v), spec) is not None


def test_matching_extremal():
    for k in range(1, 5):
        for n in range(2 * k - 1, 12):
            g = matching_extremal(k, n)
            assert find_embedding(g, parse_forest(f"{k}*P2")) is None
            assert g.edge_count <= eg_matching_number(k, n)


def test_disjoint_cliques():
    g = disjoint_cliques(10, 4)
    assert g.edge_count == 6 + 6 + 1
    assert find_embedding(g, parse_forest("P5")) is None


def test_universal_vertices_first():
    g = linear_extremal(parse_forest("2*P4"), 12).graph
    assert g.degrees()[:3] == [11, 11, 11]
    assert all(d == 3 for d in g.degrees()[3:])


def test_two_p3_extremal_shape():
    # one universal vertex over a perfect matching on the other eight
    c = star_extremal(parse_forest("2*S2"), 9, 2)
    expected = add_universal_vertices(disjoint_union_all([SmallGraph.complete(2)] * 4), 1)
    assert canonical_form(c.graph) == canonical_form(expected)
    assert c.edge_count == 12


def test_near_regular_small_examples():
    assert canonical_form(near_regular(5, 2)) == canonical_form(SmallGraph.cycle(5))
    assert near_regular(4, 3) == SmallGraph.complete(4)
    g = near_regular(5, 3)
    assert g.edge_count == 7
    assert sorted(g.degrees(), reverse=True) == [3, 3, 3, 3, 2]
    assert find_embedding(star_extremal(parse_forest("S3"), 6, 1).graph, parse_forest("S3")) is None
