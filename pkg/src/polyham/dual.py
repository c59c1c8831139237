"""Dual maps, and moving cycles and edge subsets across the duality."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Tuple

from .surface import (
    Edge,
    Face,
    MapError,
    SurfaceMap,
    Vertex,
    canonical_cycle,
    cycle_edges,
    edge_key,
    iter_isomorphisms,
    require_surface,
)


class InvalidCycleError(ValueError):
    pass


class NotAdmissibleError(ValueError):
    pass


@dataclass(frozen=True)
class CycleSpec:
    """A closed walk ``v1 .. vr`` without repeated vertices (closing edge implicit)."""

    vertices: Tuple[Vertex, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        if len(self.vertices) < 3:
            raise InvalidCycleError("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidCycleError("cycle repeats a vertex")

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def edges(self) -> List[Edge]:
        return cycle_edges(self.vertices)

    def canonical(self) -> "CycleSpec":
        return CycleSpec(canonical_cycle(self.vertices))

    def check(self, m: SurfaceMap) -> "CycleSpec":
        for a, b in self.edges:
            if (a, b) not in m.edge_faces:
                raise InvalidCycleError(f"{a}-{b} is not an edge of the map")
        return self

    def is_hamiltonian(self, m: SurfaceMap) -> bool:
        return set(self.vertices) == set(m.vertices)


@dataclass(frozen=True)
class EdgeSubgraph:
    """A set of edges of a host map, plus any isolated vertices.

    The vertex set is the union of edge endpoints; ``isolated`` only exists so
    that single-vertex components of a complement can be represented.
    """

    host: SurfaceMap = field(compare=False, repr=False)
    edges: FrozenSet[Edge]
    isolated: FrozenSet[Vertex] = frozenset()

    def __post_init__(self):
        edges = frozenset(edge_key(*e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "isolated", frozenset(self.isolated))
        for e in edges:
            if e not in self.host.edge_faces:
                raise ValueError(f"{e[0]}-{e[1]} is not an edge of the host map")
        for v in self.isolated:
            if v not in self.host.neighbors:
                raise ValueError(f"{v!r} is not a vertex of the host map")

    @property
    def vertices(self) -> FrozenSet[Vertex]:
        return frozenset(v for e in self.edges for v in e) | self.isolated

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class DualCorrespondence:
    primal: SurfaceMap
    dual: SurfaceMap
    face_label: Tuple[Vertex, ...]  # dual vertex of each primal face, by face index
    vertex_face: Dict[Vertex, int]  # dual face index of each primal vertex
    edge_map: Dict[Edge, Edge]  # primal edge -> dual edge

    def __post_init__(self):
        object.__setattr__(self, "_edge_inverse", {d: e for e, d in self.edge_map.items()})
        object.__setattr__(self, "_face_vertex", {fi: v for v, fi in self.vertex_face.items()})

    def dual_edge(self, e: Edge) -> Edge:
        return self.edge_map[edge_key(*e)]

    def primal_edge(self, d: Edge) -> Edge:
        return self._edge_inverse[edge_key(*d)]

    def primal_vertex(self, dual_face_index: int) -> Vertex:
        return self._face_vertex[dual_face_index]

    def primal_face(self, dual_vertex: Vertex) -> int:
        return self.face_label.index(dual_vertex)

    def table(self) -> List[Tuple[Face, Vertex]]:
        return [(f, self.face_label[i]) for i, f in enumerate(self.primal.faces)]


def build_dual(m: SurfaceMap, labels: Optional[Mapping[Face, Vertex]] = None) -> Tuple[SurfaceMap, DualCorrespondence]:
    """Dual map: one vertex per face, one face per vertex (in rotation order).

    Dual vertices are named ``F#<i>`` after the face's position in the sorted
    face list unless ``labels`` (canonical face -> label) is supplied.
    """
    require_surface(m)
    if labels is None:
        face_label = tuple(f"F#{i}" for i in range(len(m.faces)))
    else:
        labels = {canonical_cycle(f): str(v) for f, v in labels.items()}
        try:
            face_label = tuple(labels[f] for f in m.faces)
        except KeyError as exc:
            raise MapError(f"label table has no entry for face {exc.args[0]}") from None
        if len(set(face_label)) != len(face_label):
            raise MapError("label table assigns the same label to two faces")

    dual_faces = []
    for v in m.vertices:
        _, faces = m.rotation(v)
        dual_faces.append([face_label[fi] for fi in faces])
    try:
        dual = SurfaceMap(dual_faces)
    except MapError as exc:
        raise MapError(f"dual is not a simple map: {exc}") from None

    edge_map = {}
    for e, (fa, fb) in m.edge_faces.items():
        edge_map[e] = edge_key(face_label[fa], face_label[fb])
    if len(set(edge_map.values())) != len(edge_map):
        raise MapError("dual is not a simple map: two faces share more than one edge")

    index = {f: i for i, f in enumerate(dual.faces)}
    vertex_face = {v: index[canonical_cycle(df)] for v, df in zip(m.vertices, dual_faces)}
    corr = DualCorrespondence(m, dual, face_label, vertex_face, edge_map)
    return dual, corr


def dual_graph_of_cycle(cycle: CycleSpec, corr: DualCorrespondence) -> EdgeSubgraph:
    cycle.check(corr.primal)
    return EdgeSubgraph(corr.dual, frozenset(corr.dual_edge(e) for e in cycle.edges))


def face_counts(g: EdgeSubgraph) -> List[int]:
    """Number of edges of ``g`` on the boundary of each host face."""
    counts = [0] * len(g.host.faces)
    for e in g.edges:
        for fi in g.host.edge_faces[e]:
            counts[fi] += 1
    return counts


def face_chains(g: EdgeSubgraph) -> Optional[List[List[int]]]:
    """Split the host faces into closed chains linked by edges of ``g``.

    Only defined when every face holds exactly two edges of ``g``; then
    faces-with-links is 2-regular and falls apart into cycles.  Each chain
    is a list of face indices in walking order.
    """
    m = g.host
    if any(c != 2 for c in face_counts(g)):
        return None
    links: Dict[int, List[Tuple[Edge, int]]] = {i: [] for i in range(len(m.faces))}
    for e in sorted(g.edges):
        fa, fb = m.edge_faces[e]
        links[fa].append((e, fb))
        links[fb].append((e, fa))
    seen = set()
    chains = []
    for start in range(len(m.faces)):
        if start in seen:
            continue
        chain = [start]
        seen.add(start)
        used = set()
        cur = start
        while True:
            e, nxt = next((e, f) for e, f in links[cur] if e not in used)
            used.add(e)
            if nxt == start:
                break
            chain.append(nxt)
            seen.add(nxt)
            cur = nxt
        chains.append(chain)
    return chains


def dual_cycle_of_graph(g: EdgeSubgraph, corr: DualCorrespondence) -> CycleSpec:
    """Primal cycle through the vertices dual to the single face chain of ``g``."""
    if g.host != corr.dual:
        raise ValueError("subgraph is not hosted on the dual map of this correspondence")
    n = len(corr.primal.vertices)
    if len(g.edges) != n:
        raise NotAdmissibleError(f"graph has {len(g.edges)} edges, expected {n}")
    chains = face_chains(g)
    if chains is None:
        raise NotAdmissibleError("some face does not hold exactly two edges of the graph")
    if len(chains) != 1:
        raise NotAdmissibleError(f"faces split into {len(chains)} chains")
    return CycleSpec(corr.primal_vertex(fi) for fi in chains[0]).canonical()


# label tables


def read_label_table(text: str) -> Dict[Face, Vertex]:
    """TSV rows ``<face vertices, space separated>\\t<dual label>``."""
    table = {}
    for row in csv.reader(io.StringIO(text), delimiter="\t"):
        if not row or row[0].startswith("#"):
            continue
        if len(row) != 2:
            raise MapError(f"label table row needs 2 columns: {row!r}")
        table[canonical_cycle(row[0].split())] = row[1].strip()
    return table


def write_label_table(corr: DualCorrespondence) -> str:
    out = io.StringIO()
    writer = csv.writer(out, delimiter="\t", lineterminator="\n")
    for face, label in corr.table():
        writer.writerow([" ".join(face), label])
    return out.getvalue()


def correspondences_to(m: SurfaceMap, target_dual: SurfaceMap) -> Iterator[DualCorrespondence]:
    """Every correspondence whose dual is exactly ``target_dual``, labels included."""
    _, corr = build_dual(m)
    for phi in iter_isomorphisms(corr.dual, target_dual):
        labels = {f: phi[corr.face_label[i]] for i, f in enumerate(m.faces)}
        yield build_dual(m, labels)[1]


def correspondence_to(m: SurfaceMap, target_dual: SurfaceMap) -> Optional[DualCorrespondence]:
    return next(correspondences_to(m, target_dual), None)
