import pickle

import pytest
from hypothesis import given, settings, strategies as st

from polyham.generate import equivelar_tori
from polyham.surface import (
    MapParseError,
    SurfaceMap,
    canonical_cycle,
    check_polyhedral,
    equivelar_type,
    euler_characteristic,
    find_isomorphism,
    is_isomorphic,
    is_orientable,
    iter_isomorphisms,
    parse_map,
    validate_surface,
    vertex_link,
)

from conftest import fixture_map

SMALL_TORI = [m for pq in ((3, 6), (4, 4), (6, 3)) for *_, m in equivelar_tori(pq, 7, 14)]
FIXTURES = ["tet.map", "m1.map", "k1.map", "k2.map", "k2_dual.map"]


@pytest.mark.parametrize("name, fv, chi", [
    ("tet.map", (4, 6, 4), 2),
    ("m1.map", (7, 21, 14), 0),
    ("k1.map", (14, 21, 7), 0),
    ("k2.map", (21, 69, 46), -2),
    ("k2_dual.map", (46, 69, 21), -2),
])
def test_fixture_counts(name, fv, chi):
    m = fixture_map(name)
    assert tuple(m.f_vector) == fv
    assert euler_characteristic(m) == chi
    assert validate_surface(m).ok
    assert check_polyhedral(m).is_polyhedral
    assert is_orientable(m)


def test_equivelar_types(m1, k1, tet, k2):
    assert equivelar_type(m1) == (3, 6)
    assert equivelar_type(k1) == (6, 3)
    assert str(equivelar_type(tet)) == "{3,3}"
    assert equivelar_type(k2) is None  # vertex degrees vary


def test_mixed_faces_not_equivelar():
    # square pyramid
    m = SurfaceMap([("a", "b", "c", "d"), ("a", "b", "e"), ("b", "c", "e"), ("c", "d", "e"), ("d", "a", "e")])
    assert validate_surface(m).ok
    assert equivelar_type(m) is None
    assert euler_characteristic(m) == 2


def test_vertex_link(tet, m1):
    assert canonical_cycle(vertex_link(tet, "1")) == ("2", "3", "4")
    link = vertex_link(m1, "u11")
    assert sorted(link) == [f"u{i}" for i in range(12, 18)]
    for a, b in zip(link, link[1:] + link[:1]):
        assert m1.has_edge(a, b)
    with pytest.raises(KeyError):
        vertex_link(tet, "z")


def test_parse_errors_carry_position():
    with pytest.raises(MapParseError) as exc:
        parse_map("1 2 3\n1 2\n")
    assert exc.value.line == 2
    with pytest.raises(MapParseError, match="repeat"):
        parse_map("1 2 1\n")
    with pytest.raises(MapParseError, match="duplicate"):
        parse_map("1 2 3\n2 3 1\n1 2 4\n1 3 4\n2 3 4\n")
    with pytest.raises(MapParseError, match="expected 2"):
        parse_map("a b c\n")


def test_parse_comments_and_hash_labels():
    text = "# header\n1 2 3  # trailing\n\n1 2 4\n1 3 4\n2 3 4\n"
    assert parse_map(text).f_vector == (4, 6, 4)
    m = parse_map("F#1 F#2 F#3\nF#1 F#2 F#4\nF#1 F#3 F#4\nF#2 F#3 F#4\n")
    assert "F#1" in m.vertices


def test_lone_face_is_not_a_surface():
    m = parse_map("a b c\n", strict=False)
    report = validate_surface(m)
    assert not report.ok and not report.edges_ok


def test_two_tetrahedra_disconnected(tet):
    other = tet.relabel({v: v + "'" for v in tet.vertices})
    both = SurfaceMap(tet.faces + other.faces)
    report = validate_surface(both)
    assert report.edges_ok and not report.connected


def test_pillow_not_polyhedral():
    m = SurfaceMap([("a", "b", "c"), ("a", "c", "b")])
    assert not check_polyhedral(m).is_polyhedral


def test_edge_in_three_faces_rejected():
    faces = [("1", "2", "3"), ("1", "2", "4"), ("1", "2", "5"), ("1", "3", "4"), ("2", "3", "4")]
    report = validate_surface(SurfaceMap(faces))
    assert not report.edges_ok
    assert report.bad_edges[("1", "2")] == 3


def test_round_trip_text_and_pickle(m1):
    assert parse_map(m1.to_text()) == m1
    assert pickle.loads(pickle.dumps(m1)) == m1


def test_isomorphism(m1, k2):
    perm = {v: f"x{i}" for i, v in enumerate(reversed(sorted(m1.vertices)))}
    relabeled = m1.relabel(perm)
    phi = find_isomorphism(m1, relabeled)
    assert phi is not None and m1.relabel(phi) == relabeled
    assert not is_isomorphic(m1, fixture_map("tet.map"))
    assert len(list(iter_isomorphisms(k2, k2))) == 4


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL_TORI), st.randoms(use_true_random=False))
def test_relabel_invariance(m, rnd):
    labels = sorted(m.vertices)
    shuffled = labels[:]
    rnd.shuffle(shuffled)
    r = m.relabel({a: "v" + b for a, b in zip(labels, shuffled)})
    assert euler_characteristic(r) == euler_characteristic(m) == 0
    assert r.f_vector == m.f_vector
    assert equivelar_type(r) == equivelar_type(m)
    assert is_isomorphic(m, r)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL_TORI + [fixture_map(n) for n in FIXTURES]))
def test_handshake_identities(m):
    f0, f1, f2 = m.f_vector
    assert 2 * f1 == sum(len(f) for f in m.faces) == sum(m.degree(v) for v in m.vertices)
    et = equivelar_type(m)
    if et is not None:
        assert et.q * f0 == 2 * f1 == et.p * f2
