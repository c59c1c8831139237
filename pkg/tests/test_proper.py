import itertools

import pytest

from polyham.audit import E1, E2, E3
from polyham.dual import CycleSpec, EdgeSubgraph, build_dual, dual_graph_of_cycle, face_chains
from polyham.proper import (
    ProperType,
    check_admissible,
    check_proper_tree,
    classify_proper_type,
    complement_components,
    tree_to_type2_graph,
)

import oracles
from conftest import fixture_map, torus


def test_g1_type_one(k1):
    v = classify_proper_type(EdgeSubgraph(k1, frozenset(E1)), 7)
    assert v.admissibility.admissible
    assert v.complement_component_count == 1
    assert v.verdict is ProperType.TYPE_I


def test_g2_type_two(k1):
    v = classify_proper_type(EdgeSubgraph(k1, frozenset(E2)), 7)
    assert v.verdict is ProperType.TYPE_II
    sizes = sorted((len(c.vertices), f.verdict) for c, f in zip(v.components, v.tree_flags))
    assert sizes == [(5, True), (9, False)]
    tree = next(f for f in v.tree_flags if f.verdict)
    assert tree.degree_sum == tree.degree_sum_target == 15


def test_tet_both_sides_proper(tet):
    d, corr = build_dual(tet)
    v = classify_proper_type(dual_graph_of_cycle(CycleSpec(("1", "2", "3", "4")), corr), 4)
    assert v.verdict is ProperType.TYPE_II
    assert all(f.verdict for f in v.tree_flags)


def test_printed_g3_not_admissible():
    m = fixture_map("k2_dual.map")
    v = classify_proper_type(EdgeSubgraph(m, frozenset(E3)), 21)
    assert v.verdict is ProperType.NOT_ADMISSIBLE
    assert v.admissibility.edge_count == 16 and not v.admissibility.edge_count_ok
    assert not v.admissibility.two_per_face


def test_json_is_native(k1):
    import json
    doc = classify_proper_type(EdgeSubgraph(k1, frozenset(E2)), 7).to_json()
    assert json.loads(json.dumps(doc)) == doc


def test_complement_keeps_isolated_vertices(tet):
    d, _ = build_dual(tet)
    star = frozenset(e for e in d.edges if "F#0" in e)
    comps = complement_components(EdgeSubgraph(d, star))
    assert sorted(len(c.vertices) for c in comps) == [1, 3]
    assert any(c.isolated == {"F#0"} for c in comps)


def test_subtours_are_not_admissible(k1):
    # two-per-face sets that split into several face chains
    split = 0
    for combo in itertools.combinations(k1.edges, 7):
        g = EdgeSubgraph(k1, frozenset(combo))
        chains = face_chains(g)
        if chains is not None and len(chains) > 1:
            split += 1
            assert not check_admissible(g, 7).admissible
    assert split > 0


def test_tree_to_type2_rejects_non_trees(k1):
    with pytest.raises(ValueError):
        tree_to_type2_graph(EdgeSubgraph(k1, frozenset(E1)), 7)


def proper_touching_trees(dual, n):
    nf = len(dual.faces)
    for verts, edges in oracles.induced_proper_tree_candidates(dual):
        t = EdgeSubgraph(dual, edges, frozenset() if edges else verts)
        touched = {fi for v in verts for fi in dual.vertex_faces[v]}
        if len(touched) == nf and check_proper_tree(t, n).verdict:
            yield t


@pytest.mark.parametrize("primal", [fixture_map("tet.map"), fixture_map("m1.map"), torus((3, 6), 2, 4, 3)])
def test_touching_proper_trees_have_n_minus_2_vertices(primal):
    n = len(primal.vertices)
    dual, corr = build_dual(primal)
    trees = list(proper_touching_trees(dual, n))
    assert trees
    for t in trees:
        assert len(t.vertices) == n - 2
        g = tree_to_type2_graph(t, n)
        assert classify_proper_type(g, n).verdict is ProperType.TYPE_II
