import pytest
from hypothesis import given, strategies as st

from turanforest.forest import (
    ForestClass,
    ForestSpec,
    ForestSyntaxError,
    Kind,
    TreeComponent,
    classify,
    order4_counts,
    parse_forest,
)


def test_parse_mixed():
    spec = parse_forest("2*P4 + S3")
    assert spec.k == 3
    assert spec.total_vertices == 12
    assert spec.total_edges == 9
    assert [c.token() for c in spec.components] == ["P4", "P4", "S3"]
    with pytest.raises(ValueError):
        spec.path_orders()


def test_parse_sorts_by_order():
    spec = parse_forest("P2+P5+P4")
    assert [c.vertex_count for c in spec.components] == [5, 4, 2]


def test_p3_is_s2():
    assert TreeComponent.path(3) == TreeComponent.star(2)
    assert parse_forest("3*P3") == parse_forest("3*S2")
    assert parse_forest("S1") == parse_forest("P2")


@pytest.mark.parametrize("text", ["P1", "S0", "P0", "", "Q4", "2*", "P4++P2", "0*P4", "P-3"])
def test_bad_specs(text):
    with pytest.raises((ForestSyntaxError, ValueError)):
        parse_forest(text)


def test_empty_spec_rejected():
    with pytest.raises(ValueError):
        ForestSpec(())


@pytest.mark.parametrize(
    "text, cls",
    [
        ("P4+P2", ForestClass.LINEAR_GENERAL),
        ("P5", ForestClass.LINEAR_GENERAL),
        ("3*P2", ForestClass.LINEAR_GENERAL),
        ("2*P3", ForestClass.ALL_P3),
        ("S3+S2", ForestClass.STAR_FOREST),
        ("S3+P2", ForestClass.STAR_FOREST),
        ("P4+S3", ForestClass.ORDER4_MIXED),
        ("2*P4+S3", ForestClass.ORDER4_MIXED),
        ("P5+S3", ForestClass.UNSUPPORTED),
        ("P4+S4", ForestClass.UNSUPPORTED),
    ],
)
def test_classify(text, cls):
    assert classify(parse_forest(text)) is cls


def test_order4_counts():
    assert order4_counts(parse_forest("2*P4+S3")) == (2, 1)
    assert order4_counts(parse_forest("P4+3*S3")) == (1, 3)


def test_component_properties():
    c = TreeComponent.star(4)
    assert c.kind is Kind.STAR
    assert (c.vertex_count, c.edge_count, c.star_degree) == (5, 4, 4)
    assert not c.is_pathlike
    p = TreeComponent.path(2)
    assert p.is_pathlike and p.is_starlike
    assert p.star_degree == 1


components = st.one_of(
    st.integers(2, 9).map(TreeComponent.path),
    st.integers(1, 8).map(TreeComponent.star),
)


@given(st.lists(components, min_size=1, max_size=6))
def test_render_round_trip(comps):
    spec = ForestSpec(tuple(comps))
    again = parse_forest(spec.render())
    assert again == spec
    assert again.total_vertices == sum(c.vertex_count for c in comps)


@given(st.lists(components, min_size=1, max_size=6), st.randoms())
def test_order_irrelevant(comps, rnd):
    shuffled = list(comps)
    rnd.shuffle(shuffled)
    assert ForestSpec(tuple(comps)) == ForestSpec(tuple(shuffled))
