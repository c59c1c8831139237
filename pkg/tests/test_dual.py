import pytest
from hypothesis import given, settings, strategies as st

from polyham.audit import C1, C2, E1, E2, fixture_text
from polyham.dual import (
    CycleSpec,
    EdgeSubgraph,
    InvalidCycleError,
    NotAdmissibleError,
    build_dual,
    correspondences_to,
    dual_cycle_of_graph,
    dual_graph_of_cycle,
    face_chains,
    read_label_table,
    write_label_table,
)
from polyham.generate import equivelar_tori
from polyham.search import enumerate_hamiltonian_cycles
from polyham.surface import euler_characteristic, is_isomorphic

SMALL = [m for pq in ((3, 6), (4, 4), (6, 3)) for *_, m in equivelar_tori(pq, 7, 12)]


def test_cycle_spec():
    c = CycleSpec(("c", "a", "b", "d"))
    assert c.canonical().vertices == ("a", "b", "d", "c")
    assert c.canonical() == CycleSpec(("d", "b", "a", "c")).canonical()
    with pytest.raises(ValueError):
        CycleSpec(("a", "b"))
    with pytest.raises(ValueError):
        CycleSpec(("a", "b", "a"))


def test_cycle_check(tet, m1):
    assert CycleSpec(("1", "2", "3")).check(tet)
    with pytest.raises(InvalidCycleError):
        CycleSpec(("u11", "u12", "u99")).check(m1)
    assert not CycleSpec(("1", "2", "3")).is_hamiltonian(tet)
    assert CycleSpec(("1", "2", "3", "4")).is_hamiltonian(tet)


def test_edge_subgraph_validates(k1):
    g = EdgeSubgraph(k1, frozenset(E1))
    assert len(g.vertices) == 14
    with pytest.raises(ValueError):
        EdgeSubgraph(k1, frozenset([("v1", "v2"), ("v1", "v14")]) | {("v1", "nope")})


def test_dual_counts_and_involution(m1, k1, k2):
    for m in (m1, k1, k2):
        d, corr = build_dual(m)
        assert tuple(d.f_vector) == tuple(reversed(m.f_vector))
        assert euler_characteristic(d) == euler_characteristic(m)
        assert is_isomorphic(build_dual(d)[0], m)
        for e in m.edges:
            assert corr.primal_edge(corr.dual_edge(e)) == e


def test_dual_labels_deterministic(tet):
    d, corr = build_dual(tet)
    assert sorted(d.vertices) == ["F#0", "F#1", "F#2", "F#3"]
    assert corr.face_label[0] == "F#0"
    assert build_dual(tet)[0] == d


def test_label_table_gives_printed_k1(m1, k1, m1_corr):
    assert m1_corr.dual == k1
    text = write_label_table(m1_corr)
    assert read_label_table(text) == read_label_table(fixture_text("m1_k1.tsv"))


def test_label_table_unique_for_printed_example(m1, k1):
    # exactly one identification of dual(m1) with k1 sends E1 to C1 and E2 to C2
    g1, g2 = EdgeSubgraph(k1, frozenset(E1)), EdgeSubgraph(k1, frozenset(E2))
    c1, c2 = CycleSpec(C1).canonical(), CycleSpec(C2).canonical()
    good = [c for c in correspondences_to(m1, k1)
            if dual_cycle_of_graph(g1, c) == c1 and dual_cycle_of_graph(g2, c) == c2]
    assert len(good) == 1


def test_cycle_graph_round_trip(m1_corr):
    g = dual_graph_of_cycle(CycleSpec(C2), m1_corr)
    assert g.edges == frozenset(E2)
    assert dual_cycle_of_graph(g, m1_corr) == CycleSpec(C2).canonical()


def test_not_admissible(k1, m1_corr):
    with pytest.raises(NotAdmissibleError):
        dual_cycle_of_graph(EdgeSubgraph(k1, frozenset(E1[:-1])), m1_corr)
    assert face_chains(EdgeSubgraph(k1, frozenset(E1[:-1]))) is None


def test_non_hamiltonian_cycle_has_short_dual(tet):
    d, corr = build_dual(tet)
    g = dual_graph_of_cycle(CycleSpec(("1", "2", "3")), corr)
    assert len(g.edges) == 3


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_hamiltonian_cycle_duals_round_trip(m, data):
    d, corr = build_dual(m)
    cycles = list(enumerate_hamiltonian_cycles(m))
    if not cycles:
        return
    c = data.draw(st.sampled_from(cycles))
    g = dual_graph_of_cycle(c, corr)
    assert len(g.edges) == len(m.vertices)
    assert dual_cycle_of_graph(g, corr) == c.canonical()
