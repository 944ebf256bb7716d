import json
from functools import lru_cache

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher
from networkx.generators.atlas import graph_atlas_g

from turanforest.canon import canonical_form
from turanforest.constructions import extremal_constructions
from turanforest.embedding import find_embedding, forest_graph
from turanforest.forest import parse_forest
from turanforest.formulas import eg_path_bound, turan_formula
from turanforest.graph import SmallGraph, disjoint_union_all
from turanforest.oracle import exact_turan, graph_from_label, lower_bound_witness, verify_range


@lru_cache(maxsize=None)
def atlas_by_order():
    out: dict[int, list] = {}
    for h in graph_atlas_g():
        out.setdefault(h.number_of_nodes(), []).append(h)
    return out


def small_from_nx(h) -> SmallGraph:
    idx = {v: i for i, v in enumerate(h.nodes())}
    return SmallGraph.from_edges(h.number_of_nodes(), [(idx[u], idx[v]) for u, v in h.edges()])


def brute_force(text: str, n: int):
    """Max edges and extremal labels over every graph in the atlas, using networkx containment."""
    f = forest_graph(parse_forest(text))
    pattern = nx.Graph()
    pattern.add_nodes_from(range(f.n))
    pattern.add_edges_from(f.edges())
    best, labels = -1, set()
    for h in sorted(atlas_by_order()[n], key=lambda h: -h.number_of_edges()):
        m = h.number_of_edges()
        if m < best:
            break
        if GraphMatcher(h, pattern).subgraph_is_monomorphic():
            continue
        best = m
        labels.add(canonical_form(small_from_nx(h)))
    return best, labels


@pytest.mark.parametrize("text", ["2*P2", "3*P2", "S2", "P4", "P5", "P4+P2", "S3+S2", "S3+P2", "P4+S3", "2*S2"])
def test_oracle_matches_atlas(text):
    spec = parse_forest(text)
    for n in range(1, 8):
        res = exact_turan(spec, n, enumerate_all=True)
        best, labels = brute_force(text, n)
        assert res.exact
        assert res.max_edges == best, n
        assert set(res.labels) == labels, n


@pytest.mark.parametrize(
    "text, n, value, classes",
    [
        ("S2", 5, 2, 1),
        ("2*P2", 5, 4, 1),
        ("P4", 6, 6, 1),
        ("2*S2", 8, 11, 1),
        ("2*S2", 9, 12, 2),
        ("P4+P2", 8, 13, 1),
        ("P4+P2", 10, 17, 1),
        ("P6", 9, 16, 1),
        ("2*P4", 9, 22, 1),
        ("P5", 10, 13, None),
        ("S3+S2", 10, 17, None),
        ("P4+S3", 10, 24, None),
    ],
)
def test_frozen_values(text, n, value, classes):
    res = exact_turan(parse_forest(text), n, enumerate_all=True)
    assert res.exact
    assert res.max_edges == value
    if classes is not None:
        assert len(res.extremal) == classes


def test_p4_extremal_is_two_triangles():
    res = exact_turan(parse_forest("P4"), 6, enumerate_all=True)
    two_k3 = disjoint_union_all([SmallGraph.complete(3)] * 2)
    assert res.labels == [canonical_form(two_k3)]


def test_extremal_graphs_sound():
    for text, n in [("P4+P2", 9), ("2*S2", 9), ("S3+S2", 8), ("P5+P3", 9)]:
        spec = parse_forest(text)
        res = exact_turan(spec, n, enumerate_all=True)
        for lab, g in res.extremal:
            assert g.n == n
            assert g.edge_count == res.max_edges
            assert find_embedding(g, spec) is None
            assert graph_from_label(lab) == g
        assert len(set(res.labels)) == len(res.labels)


def test_lower_bound_below_oracle():
    for text in ["P4+P2", "P5+P3", "2*P4", "S3+S2", "2*S3", "3*S2", "P4+S3"]:
        spec = parse_forest(text)
        for n in range(spec.total_vertices, 10):
            res = exact_turan(spec, n)
            witness = lower_bound_witness(spec, n)
            assert find_embedding(witness, spec) is None
            assert witness.edge_count <= res.max_edges
            for c in extremal_constructions(spec, n):
                assert c.edge_count <= res.max_edges


def test_eg_path_upper_bound_and_monotone():
    for k in range(2, 7):
        prev = -1
        for n in range(1, 10):
            value = exact_turan(parse_forest(f"P{k}"), n).max_edges
            assert value <= eg_path_bound(k, n)
            assert value >= prev
            prev = value


def test_subforest_monotone():
    # removing a component can only shrink ex(n, .)
    for big, small in [("P4+P2", "P4"), ("S3+S2", "S3"), ("2*P4", "P4"), ("P4+S3", "S3")]:
        for n in range(4, 10):
            assert exact_turan(parse_forest(big), n).max_edges >= exact_turan(parse_forest(small), n).max_edges


def test_deterministic_json():
    spec = parse_forest("2*S2")
    a = exact_turan(spec, 9, enumerate_all=True).to_json_obj(include_stats=False)
    b = exact_turan(spec, 9, enumerate_all=True).to_json_obj(include_stats=False)
    assert json.dumps(a) == json.dumps(b)
    assert a["extremal"] == sorted(a["extremal"])


def test_timeout_gives_lower_bound():
    spec = parse_forest("P5+P4+P2")
    res = exact_turan(spec, 11, timeout=1e-6)
    assert not res.exact
    assert res.max_edges == lower_bound_witness(spec, 11).edge_count
    assert find_embedding(res.extremal[0][1], spec) is None


def test_bound_hint_overshoot_recovers():
    spec = parse_forest("P4+P2")
    res = exact_turan(spec, 8, bound_hint=20, enumerate_all=True)
    assert res.exact
    assert res.max_edges == 13


def test_bound_hint_correct_is_same():
    spec = parse_forest("2*S2")
    plain = exact_turan(spec, 9, enumerate_all=True)
    hinted = exact_turan(spec, 9, enumerate_all=True, bound_hint=12)
    assert plain.labels == hinted.labels


def test_tiny_orders():
    spec = parse_forest("P2")
    assert exact_turan(spec, 0).max_edges == 0
    assert exact_turan(spec, 1).max_edges == 0
    assert exact_turan(parse_forest("P4+P2"), 5).max_edges == 10


def test_soft_cap_warns():
    with pytest.warns(UserWarning):
        exact_turan(parse_forest("P2"), 13)


def test_verify_range_p4_p2():
    rep = verify_range(parse_forest("P4+P2"), 6, 12, oracle_cap=10)
    assert rep.row(6).verdict == "below-threshold"
    for n in range(7, 11):
        row = rep.row(n)
        assert row.verdict == "match" and row.unique
    assert rep.row(11).verdict == "bound-only"
    assert rep.threshold == 7
    assert not rep.mismatches
    assert "threshold" in rep.to_table()


def test_verify_range_matching_reference():
    rep = verify_range(parse_forest("2*P2"), 3, 8, oracle_cap=8)
    for row in rep.rows:
        assert row.reference == row.oracle
    # the triangle beats the linear expression at n = 3
    row = rep.row(3)
    assert (row.formula, row.oracle, row.verdict, row.witness) == (2, 3, "below-threshold", "Bw")


def test_verify_range_formula_values():
    spec = parse_forest("S3+S2")
    rep = verify_range(spec, 7, 12, oracle_cap=7)
    for row in rep.rows:
        assert row.formula == turan_formula(spec, row.n).value
        assert row.construction_free


def test_parallel_path_is_exercised(monkeypatch):
    import turanforest.oracle as oracle

    submitted = []

    class CountingPool(oracle.ProcessPoolExecutor):
        def submit(self, *args, **kwargs):
            submitted.append(args[0])
            return super().submit(*args, **kwargs)

    monkeypatch.setattr(oracle, "ProcessPoolExecutor", CountingPool)
    spec = parse_forest("P4+P2")
    serial = exact_turan(spec, 8, enumerate_all=True)
    parallel = exact_turan(spec, 8, enumerate_all=True, workers=3)
    assert submitted
    assert parallel.labels == serial.labels
    assert parallel.stats.nodes_explored == serial.stats.nodes_explored
    assert parallel.stats.level_sizes == serial.stats.level_sizes
